"""Run property checkers over random or exhaustive instance streams."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from ..errors import ConfigError, OracleInfeasible
from .generators import GENERATORS, Instance, TrialConfig, trial_rng
from .oracle import enumerate_ring, ring_size
from .properties import CATALOG, Context, PropertyId, Verdict, check_property

# Exhaustive witness search multiplies cost by the ring size; beyond this the
# canonical witnesses are used instead.
SEARCH_LIMIT = 256

_ARITY = {"aw": 2, "ab": 2, "abw": 3, "abcw": 4}


@dataclass
class IdResult:
    id: PropertyId
    trials: int = 0
    applicable: int = 0
    positive: int = 0
    counterexample: dict | None = None
    clause: str | None = None
    min_applicable: int = 0

    @property
    def verdict(self) -> str:
        if self.counterexample is not None:
            return "fail"
        if self.applicable < self.min_applicable:
            return "vacuous"
        return "pass"

    def to_json(self) -> dict:
        out = {
            "verdict": self.verdict,
            "trials": self.trials,
            "applicable": self.applicable,
            "positive": self.positive,
        }
        if self.counterexample is not None:
            out["clause"] = self.clause
            out["counterexample"] = self.counterexample
        return out


@dataclass
class SuiteReport:
    config: TrialConfig
    results: dict[PropertyId, IdResult] = field(default_factory=dict)

    @property
    def failures(self) -> list[IdResult]:
        return [r for r in self.results.values() if r.verdict == "fail"]

    @property
    def ok(self) -> bool:
        return all(r.verdict == "pass" for r in self.results.values())

    def to_json(self) -> dict:
        return {
            "config": self.config.to_json(),
            "ok": self.ok,
            "results": {pid.value: r.to_json() for pid, r in self.results.items()},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def _exhaustive_instances(cfg: TrialConfig, signature: str) -> Iterator[Instance]:
    p, n = cfg.domain.p, cfg.dim
    k = _ARITY[signature]
    if ring_size(p, n) ** k > cfg.budget:
        raise OracleInfeasible(
            f"{signature} over M_{n}(Z_{p}) needs {ring_size(p, n) ** k} instances, budget {cfg.budget}"
        )
    ring = list(enumerate_ring(p, n, cfg.budget))
    for combo in itertools.product(ring, repeat=k):
        if signature == "aw":
            yield Instance(combo[0], w=combo[1])
        elif signature == "ab":
            yield Instance(combo[0], combo[1])
        elif signature == "abw":
            yield Instance(combo[0], combo[1], combo[2])
        else:
            yield Instance(combo[0], combo[1], combo[2], combo[3])


def _instances(cfg: TrialConfig, pid: PropertyId) -> Iterator[Instance]:
    spec = CATALOG[pid]
    if spec.signature == "fixed":
        yield spec.fixed()
        return
    if cfg.exhaustive:
        yield from _exhaustive_instances(cfg, spec.signature)
        return
    gen = GENERATORS[spec.generator]
    for i in range(cfg.trials):
        yield gen(cfg, trial_rng(cfg.seed, pid.value, i))


def _context(cfg: TrialConfig) -> Context:
    if cfg.exhaustive and ring_size(cfg.domain.p, cfg.dim) <= SEARCH_LIMIT:
        return Context(tuple(enumerate_ring(cfg.domain.p, cfg.dim, cfg.budget)))
    return Context()


def run_property(cfg: TrialConfig, pid: PropertyId, ctx: Context | None = None) -> IdResult:
    """Check one property over its instance stream, stopping at the first failure."""
    ctx = ctx if ctx is not None else _context(cfg)
    res = IdResult(pid, min_applicable=0 if CATALOG[pid].signature == "fixed" else cfg.min_applicable)
    for inst in _instances(cfg, pid):
        res.trials += 1
        out = check_property(pid, inst, ctx)
        if out.verdict is Verdict.INAPPLICABLE:
            continue
        res.applicable += 1
        if out.verdict is Verdict.FAILS:
            res.clause = out.clause
            res.counterexample = out.instance.to_json()
            break
        res.positive += out.positive
    return res


def run_suite(cfg: TrialConfig, ids: Iterable[PropertyId | str] | None = None) -> SuiteReport:
    """Run each id in catalog order; ``None`` means every id."""
    if cfg.exhaustive and not cfg.domain.is_finite:
        raise ConfigError("exhaustive mode needs a finite domain")
    wanted = set(CATALOG) if ids is None else {
        PropertyId.parse(i) if isinstance(i, str) else i for i in ids
    }
    report = SuiteReport(cfg)
    ctx = _context(cfg)
    for pid in CATALOG:
        if pid in wanted:
            report.results[pid] = run_property(cfg, pid, ctx)
    return report
