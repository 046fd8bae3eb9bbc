"""Command-line interface: JSON matrices in, a JSON CommandResult out.

Exit status is 0 exactly when the result's status is "ok".
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from pathlib import Path

from .errors import ConfigError, ParseError, ShapeError, WCoreError
from .geninv import GenInvKind, InverseDoesNotExist, NotWCoreInvertible, compute
from .harness import PropertyId, TrialConfig, brute_force_inverse, enumerate_ring, run_suite
from .matrix import Matrix
from .orders import (
    OrderKind,
    OrderReport,
    PreconditionUnmet,
    core_characterizations,
    order_holds,
    w_core_characterizations,
)
from .worked_examples import replay
from .scalar import MOD_P, ScalarDomain

MAX_ENUM_P = 7


# -- documents ----------------------------------------------------------------


def matrix_from_document(doc: dict) -> Matrix:
    """Build a Matrix from a MatrixDocument, checking the declared shape."""
    try:
        domain = ScalarDomain.from_name(doc["domain"])
        rows, cols, entries = doc["rows"], doc["cols"], doc["entries"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"matrix document needs domain, rows, cols and entries ({exc})") from None
    if len(entries) != rows or any(len(r) != cols for r in entries):
        raise ShapeError(f"entries do not match the declared {rows}x{cols} shape")
    return Matrix(domain, [[str(v) for v in row] for row in entries])


def matrix_to_document(m: Matrix) -> dict:
    return {"domain": m.domain.name, "rows": m.rows, "cols": m.cols, "entries": m.to_strings()}


def load_matrix(spec: str) -> Matrix:
    """A file path, "-" for stdin, or an inline JSON document."""
    text = spec
    if spec == "-":
        text = sys.stdin.read()
    elif not spec.lstrip().startswith("{"):
        text = Path(spec).read_text()
    try:
        return matrix_from_document(json.loads(text))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {spec!r}: {exc}") from None


def report_to_json(rep: OrderReport) -> dict:
    return {
        "kind": rep.kind.value,
        "holds": rep.holds,
        "mode": rep.mode,
        "failed_condition": rep.failed_condition,
        "conditions": [{"name": n, "holds": v} for n, v in rep.conditions],
        "witnesses": {k: matrix_to_document(m) for k, m in sorted(rep.witnesses.items())},
    }


class CommandFailed(Exception):
    """A command ran but its verdict is an error (e.g. no inverse exists)."""

    def __init__(self, tag: str, message: str, payload=None):
        super().__init__(message)
        self.tag = tag
        self.payload = payload


# -- commands -----------------------------------------------------------------


def cmd_compute(args) -> dict:
    kind = GenInvKind(args.kind)
    a = load_matrix(args.a)
    aux = load_matrix(args.w) if args.w else None
    if kind.needs_aux and aux is None:
        raise ConfigError(f"--kind {kind.value} needs --w (the auxiliary element)")
    try:
        res = compute(kind, a, aux)
    except InverseDoesNotExist as exc:
        tag = type(exc).__name__
        detail = {"reasons": list(exc.reasons)} if isinstance(exc, NotWCoreInvertible) else None
        raise CommandFailed(tag, str(exc), detail) from None
    return {
        "kind": kind.value,
        "inverse": matrix_to_document(res.value),
        "certificate": [{"equation": n, "holds": v} for n, v in res.certificate],
    }


def _vector(conds) -> list[dict]:
    return [{"condition": k, "holds": v} for k, v in conds]


def cmd_order(args) -> dict:
    kind = OrderKind(args.kind)
    a, b = load_matrix(args.a), load_matrix(args.b)
    w = load_matrix(args.w) if args.w else None
    if kind is OrderKind.WCORE and w is None:
        raise ConfigError("--kind wcore needs --w")
    try:
        rep = order_holds(kind, a, b, w, mode=args.mode)
    except PreconditionUnmet as exc:
        raise CommandFailed("PreconditionUnmet", str(exc)) from None
    out = report_to_json(rep)
    if kind is OrderKind.WCORE:
        out["characterizations"] = _vector(w_core_characterizations(a, b, w))
    elif kind is OrderKind.CORE:
        out["characterizations"] = _vector(core_characterizations(a, b))
    return out


def _trial_config(args) -> TrialConfig:
    return TrialConfig(
        ScalarDomain.from_name(args.domain),
        dim=args.dim,
        trials=args.trials,
        seed=args.seed,
        exhaustive=args.exhaustive,
        min_applicable=args.min_applicable,
    )


def cmd_verify(args) -> dict:
    if not args.all and not args.id:
        raise ConfigError("choose --all or at least one --id")
    ids = None if args.all else [PropertyId.parse(i) for i in args.id]
    report = run_suite(_trial_config(args), ids)
    payload = report.to_json()
    if not report.ok:
        bad = [k for k, r in payload["results"].items() if r["verdict"] != "pass"]
        raise CommandFailed("PropertyFailures", f"{len(bad)} properties did not pass: {bad}", payload)
    return payload


def cmd_examples(args) -> dict:
    results = replay()
    payload = {"assertions": [r.to_json() for r in results], "total": len(results)}
    failed = [r for r in results if not r.ok]
    if failed:
        raise CommandFailed("ExampleMismatch", f"{len(failed)} example assertions failed", payload)
    return payload


def cmd_enumerate(args) -> dict:
    domain = ScalarDomain.from_name(args.domain)
    if domain.kind != MOD_P:
        raise ConfigError("enumerate needs --domain mod_p:<p>")
    if domain.p > MAX_ENUM_P:
        raise ConfigError(f"enumerate is limited to p <= {MAX_ENUM_P}")
    if args.kind:
        kind = GenInvKind(args.kind)
        if not args.a:
            raise ConfigError("--kind needs --a")
        a = load_matrix(args.a)
        aux = load_matrix(args.w) if args.w else None
        sols = brute_force_inverse(kind, a, aux)
        return {"kind": kind.value, "count": len(sols), "solutions": [matrix_to_document(m) for m in sols]}
    ring = list(enumerate_ring(domain.p, args.dim))
    return {"domain": domain.name, "dim": args.dim, "count": len(ring),
            "matrices": [m.to_strings() for m in ring]}


COMMANDS = {
    "compute": cmd_compute,
    "order": cmd_order,
    "verify": cmd_verify,
    "examples": cmd_examples,
    "enumerate": cmd_enumerate,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wcore", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    kinds = [k.value for k in GenInvKind]
    orders = [k.value for k in OrderKind]

    def common(p):
        p.add_argument("--no-timestamp", action="store_true", help="omit the timestamp field")

    p = sub.add_parser("compute", help="compute a generalized inverse")
    p.add_argument("--kind", required=True, choices=kinds)
    p.add_argument("--a", required=True, help="matrix document: path, '-' or inline JSON")
    p.add_argument("--w", help="auxiliary element: w for wcore, d for along")
    common(p)

    p = sub.add_parser("order", help="decide a partial order")
    p.add_argument("--kind", required=True, choices=orders)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--w")
    p.add_argument("--mode", choices=("strict", "relaxed"), default="relaxed",
                   help="wcore only: strict also requires b to be w-core invertible")
    common(p)

    p = sub.add_parser("verify", help="run property suites")
    p.add_argument("--id", action="append", help="property id (repeatable)")
    p.add_argument("--all", action="store_true")
    p.add_argument("--domain", default="gaussian_rationals")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--min-applicable", type=int, default=0)
    common(p)

    p = sub.add_parser("examples", help="replay the embedded worked examples")
    common(p)

    p = sub.add_parser("enumerate", help="list M_n(Z_p), or every inverse of a given kind")
    p.add_argument("--domain", required=True)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--kind", choices=kinds)
    p.add_argument("--a")
    p.add_argument("--w")
    common(p)
    return parser


def run(argv: list[str] | None = None) -> tuple[dict, int]:
    """Parse and execute; returns (CommandResult, exit code)."""
    args = build_parser().parse_args(argv)
    result = {"status": "ok", "payload": None, "diagnostics": []}
    try:
        result["payload"] = COMMANDS[args.command](args)
    except CommandFailed as exc:
        result.update(status="error", payload=exc.payload, error=exc.tag)
        result["diagnostics"].append(str(exc))
    except (WCoreError, ValueError, OSError) as exc:
        result.update(status="error", error=type(exc).__name__)
        result["diagnostics"].append(str(exc))
    if not args.no_timestamp:
        result["timestamp"] = datetime.now(timezone.utc).isoformat()
    return result, 0 if result["status"] == "ok" else 1


def main(argv: list[str] | None = None) -> int:
    result, code = run(argv)
    json.dump(result, sys.stdout, indent=2, sort_keys=True, ensure_ascii=False)
    sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
