"""Decision procedures for matrix partial orders, with witnesses.

Every order is evaluated from its defining condition. Existential
quantifiers are decided constructively: the minus order solves a linear
system for the inner inverse, and the characterization vectors exhibit the
canonical witnesses p = awx, e = xaw, f = wxa (x the w-core inverse of a),
or search a supplied candidate list when one is given (finite rings).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ShapeError, WCoreError
from .geninv import (
    _core,
    _group,
    _one_three,
    _wcore,
    _along,
)
from .matrix import (
    Matrix,
    col_space_le,
    identity,
    left_annihilator_contained,
    right_annihilator_contained,
    row_space_le,
    solve_left,
    solve_right,
    star,
)

__all__ = [
    "OrderKind",
    "OrderReport",
    "PreconditionUnmet",
    "order_holds",
    "holds",
    "w_core_characterizations",
    "core_characterizations",
    "projection_characterization",
    "idempotent_characterizations",
    "minus_witness",
]

ROMAN = ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi", "xii")


class OrderKind(enum.Enum):
    MINUS = "minus"
    PLUS = "plus"
    SHARP = "sharp"
    STAR = "star"
    LEFT_STAR = "leftstar"
    RIGHT_SHARP = "rightsharp"
    DIAMOND = "diamond"
    CORE = "core"
    WCORE = "wcore"


class PreconditionUnmet(WCoreError):
    """The order is undefined because an element lacks the inverse it needs."""

    def __init__(self, kind, element: str, missing: str):
        super().__init__(f"{getattr(kind, 'value', kind)}: {element} has no {missing}")
        self.kind = kind
        self.element = element
        self.missing = missing


@dataclass
class OrderReport:
    kind: OrderKind
    holds: bool
    mode: str = "strict"
    failed_condition: str | None = None
    conditions: list[tuple[str, bool]] = field(default_factory=list)
    witnesses: dict[str, Matrix] = field(default_factory=dict)

    def __bool__(self):
        return self.holds

    def check_witnesses(self, a: Matrix, b: Matrix, w: Matrix | None = None):
        """Re-verify every witness; a failure here is a bug in this module."""
        if not self.holds:
            return
        wt = self.witnesses
        problems = []
        if "p" in wt and not wt["p"].is_projection():
            problems.append("p is not a projection")
        if "e" in wt and wt["e"] @ a != a:
            problems.append("ea != a")
        if "f" in wt and w is not None and wt["f"] @ w @ a != w @ a:
            problems.append("fwa != wa")
        if "X" in wt and b @ wt["X"] != a:
            problems.append("bX != a")
        if "Y" in wt and wt["Y"] @ b != a:
            problems.append("Yb != a")
        for key in ("inner", "reflexive"):
            if key in wt:
                g = wt[key]
                if a @ g @ a != a or g @ a != g @ b or a @ g != b @ g:
                    problems.append(f"{key} witness fails its equations")
        if problems:
            raise AssertionError(f"{self.kind.value} witnesses invalid: {problems}")


def _square(*ms: Matrix):
    n = ms[0].rows
    for m in ms:
        if not m.is_square or m.rows != n or m.domain != ms[0].domain:
            raise ShapeError("expected square matrices of one size and domain")


def minus_witness(a: Matrix, b: Matrix) -> Matrix | None:
    """An inner inverse g of a with ga = gb and ag = bg, or None.

    The three conditions axa = a, x(b-a) = 0, (b-a)x = 0 are linear in the
    entries of x, so the existential is decided by one linear solve.
    """
    n = a.rows
    dom = a.domain
    d = b - a
    A, D = a.data, d.data
    zero = dom.zero
    rows, rhs = [], []
    for i in range(n):
        for j in range(n):
            rows.append([A[i][k] * A[l][j] for k in range(n) for l in range(n)])
            rhs.append((A[i][j],))
    for i in range(n):
        for j in range(n):
            rows.append([D[l][j] if k == i else zero for k in range(n) for l in range(n)])
            rhs.append((zero,))
    for i in range(n):
        for j in range(n):
            rows.append([D[i][k] if l == j else zero for k in range(n) for l in range(n)])
            rhs.append((zero,))
    M = Matrix._make(dom, len(rows), n * n, tuple(map(tuple, rows)))
    v = solve_right(M, Matrix._make(dom, len(rhs), 1, tuple(rhs)))
    if v is None:
        return None
    flat = [v.data[k][0] for k in range(n * n)]
    return Matrix._make(dom, n, n, tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)))


def _finish(kind, conds, mode="strict", witnesses=None, a=None, b=None, w=None) -> OrderReport:
    failed = [name for name, ok in conds if not ok]
    report = OrderReport(
        kind=kind,
        holds=not failed,
        mode=mode,
        failed_condition="; ".join(failed) or None,
        conditions=list(conds),
        witnesses=witnesses or {},
    )
    if a is not None:
        report.check_witnesses(a, b, w)
    return report


def order_holds(
    kind: OrderKind | str,
    a: Matrix,
    b: Matrix,
    w: Matrix | None = None,
    mode: str = "strict",
) -> OrderReport:
    """Decide whether a is below b in the order ``kind``.

    ``mode`` only matters for the w-core order: "strict" requires both a and b
    to be w-core invertible, "relaxed" only a.
    Raises :class:`PreconditionUnmet` when the order is not defined for (a, b).
    """
    kind = OrderKind(kind)
    if mode not in ("strict", "relaxed"):
        raise ValueError(f"unknown mode {mode!r}")
    _square(a, b)
    K = OrderKind

    if kind in (K.MINUS, K.PLUS):
        g = minus_witness(a, b)
        if g is None:
            cond = [("exists g: aga=a, ga=gb, ag=bg", False)]
            return _finish(kind, cond, mode)
        wit = {"inner": g} if kind is K.MINUS else {"reflexive": g @ a @ g}
        label = "inner" if kind is K.MINUS else "reflexive"
        return _finish(kind, [(f"exists {label} g: ga=gb, ag=bg", True)], mode, wit, a, b)

    if kind is K.SHARP:
        g = _group(a)
        if g is None:
            raise PreconditionUnmet(kind, "a", "group inverse")
        conds = [("a^#a = a^#b", g @ a == g @ b), ("aa^# = ba^#", a @ g == b @ g)]
        return _finish(kind, conds, mode, {"group": g}, a, b)

    if kind is K.STAR:
        sa = star(a)
        conds = [("a*a = a*b", sa @ a == sa @ b), ("aa* = ba*", a @ sa == b @ sa)]
        return _finish(kind, conds, mode)

    if kind is K.LEFT_STAR:
        sa = star(a)
        X = solve_right(b, a)
        conds = [("a*a = a*b", sa @ a == sa @ b), ("aR ⊆ bR", X is not None)]
        wit = {"X": X} if X is not None else {}
        return _finish(kind, conds, mode, wit, a, b)

    if kind is K.RIGHT_SHARP:
        g = _group(a)
        if g is None:
            raise PreconditionUnmet(kind, "a", "group inverse")
        Y = solve_left(b, a)
        conds = [("aa^# = ba^#", a @ g == b @ g), ("Ra ⊆ Rb", Y is not None)]
        wit = {"group": g}
        if Y is not None:
            wit["Y"] = Y
        return _finish(kind, conds, mode, wit, a, b)

    if kind is K.DIAMOND:
        X = solve_right(b, a)
        Y = solve_left(b, a)
        conds = [
            ("aa*a = ab*a", a @ star(a) @ a == a @ star(b) @ a),
            ("aR ⊆ bR", X is not None),
            ("Ra ⊆ Rb", Y is not None),
        ]
        wit = {k: v for k, v in (("X", X), ("Y", Y)) if v is not None}
        return _finish(kind, conds, mode, wit, a, b)

    if kind is K.CORE:
        x = _core(a)
        if x is None:
            raise PreconditionUnmet(kind, "a", "core inverse")
        conds = [("a^⊕a = a^⊕b", x @ a == x @ b), ("aa^⊕ = ba^⊕", a @ x == b @ x)]
        return _finish(kind, conds, mode, {"core": x, "p": a @ x}, a, b)

    if kind is K.WCORE:
        if w is None:
            raise ValueError("the w-core order needs w")
        _square(a, w)
        x = _wcore(a, w)
        if isinstance(x, tuple):
            raise PreconditionUnmet(kind, "a", "w-core inverse")
        if mode == "strict" and isinstance(_wcore(b, w), tuple):
            raise PreconditionUnmet(kind, "b", "w-core inverse")
        conds = [
            ("a_w^⊕a = a_w^⊕b", x @ a == x @ b),
            ("awa_w^⊕ = bwa_w^⊕", a @ w @ x == b @ w @ x),
        ]
        wit = {"wcore": x, "p": a @ w @ x, "e": x @ a @ w, "f": w @ x @ a}
        return _finish(kind, conds, mode, wit, a, b, w)

    raise ValueError(f"unknown order {kind}")


def holds(kind, a, b, w=None, mode="strict") -> bool | None:
    """Boolean form of :func:`order_holds`; None when the order is undefined."""
    try:
        return order_holds(kind, a, b, w, mode).holds
    except PreconditionUnmet:
        return None


# -- characterization vectors -------------------------------------------------


def _col_eq(a, b):
    return col_space_le(a, b) and col_space_le(b, a)


def _row_eq(a, b):
    return row_space_le(a, b) and row_space_le(b, a)


def _left_ann_eq(a, b):
    return left_annihilator_contained(a, b) and left_annihilator_contained(b, a)


def _right_ann_eq(a, b):
    return right_annihilator_contained(a, b) and right_annihilator_contained(b, a)


def _existentials(a, b, w, p_cands, e_cands, f_cands) -> dict[str, bool]:
    """Conditions (vi)-(xii) of the w-core (or, with w = 1, core) characterization.

    In each condition the projection p and the element e (or f) occur in
    separate conjuncts, so "exists (p, e)" splits into "exists p" and "exists e".
    """
    aw, wa = a @ w, w @ a
    projs = [p for p in p_cands if p.is_projection()]

    def some(cands, pred):
        return any(pred(c) for c in cands)

    p_range = some(projs, lambda p: _col_eq(a, p) and p @ a == p @ b)
    p_ann = some(projs, lambda p: _left_ann_eq(p, a) and p @ a == p @ b)
    p_pb = some(projs, lambda p: p @ b == a)

    def e_base(e):
        return e @ a == a and aw @ e == b @ w @ e

    e_row = some(e_cands, lambda e: e_base(e) and _row_eq(e, aw))
    e_ann = some(e_cands, lambda e: e_base(e) and _right_ann_eq(e, aw))

    def f_base(f):
        return a @ f == b @ f and f @ wa == wa

    f_row = some(f_cands, lambda f: f_base(f) and _row_eq(a, f))
    f_ann = some(f_cands, lambda f: f_base(f) and _right_ann_eq(a, f))
    f_incl = some(f_cands, lambda f: f_base(f) and right_annihilator_contained(a, f))

    e_xi = some(e_cands, lambda e: e @ a == a and b @ w @ e == aw)
    e_xii = some(e_cands, lambda e: e @ a == a and b @ w @ e == aw @ e)

    return {
        "vi": p_range and e_row,
        "vii": p_ann and e_ann,
        "viii": p_range and f_row,
        "ix": p_ann and f_ann,
        "x": p_ann and f_incl,
        "xi": p_pb and e_xi,
        "xii": p_pb and e_xii,
    }


def _candidates(search, canonical):
    if search is None:
        return [canonical]
    return list(search)


def w_core_characterizations(
    a: Matrix, b: Matrix, w: Matrix, search: Iterable[Matrix] | None = None
) -> list[tuple[str, bool]]:
    """The twelve equivalent conditions for a to be below b in the w-core order.

    Requires a to be w-core invertible. With ``search`` (e.g. every matrix of
    a finite ring) the existential conditions are decided by exhaustive
    witness search instead of by exhibiting the canonical witnesses.
    """
    _square(a, b, w)
    x = _wcore(a, w)
    if isinstance(x, tuple):
        raise PreconditionUnmet(OrderKind.WCORE, "a", "w-core inverse")
    wa = w @ a
    along = _along(w, a)
    a13 = _one_three(a, "first")
    wa_g = _group(wa)
    sa = star(a)
    awx, bwx = a @ w @ x, b @ w @ x
    star_eq = sa @ a == sa @ b
    conds = {
        "i": x @ a == x @ b and awx == bwx,
        "ii": along == along @ a13 @ b and a == b @ w @ along,
        "iii": star_eq and b @ wa == a @ wa,
        "iv": star_eq and b @ wa_g == a @ wa_g,
        "v": a == awx @ b and a == bwx @ a,
    }
    cands = list(search) if search is not None else None
    conds.update(
        _existentials(
            a, b, w,
            _candidates(cands, awx),
            _candidates(cands, x @ a @ w),
            _candidates(cands, w @ x @ a),
        )
    )
    return [(k, conds[k]) for k in ROMAN]


def core_characterizations(
    a: Matrix, b: Matrix, search: Iterable[Matrix] | None = None
) -> list[tuple[str, bool]]:
    """The twelve equivalent conditions for a to be below b in the core order."""
    _square(a, b)
    x = _core(a)
    if x is None:
        raise PreconditionUnmet(OrderKind.CORE, "a", "core inverse")
    one = identity(a.domain, a.rows)
    g = _group(a)
    a13 = _one_three(a, "first")
    sa = star(a)
    star_eq = sa @ a == sa @ b
    conds = {
        "i": x @ a == x @ b and a @ x == b @ x,
        "ii": a == a @ a13 @ b and a == b @ g @ a,
        "iii": star_eq and b @ a == a @ a,
        "iv": star_eq and b @ g == a @ g,
        "v": a == a @ x @ b and a == b @ x @ a,
    }
    cands = list(search) if search is not None else None
    conds.update(
        _existentials(
            a, b, one,
            _candidates(cands, a @ x),
            _candidates(cands, x @ a),
            _candidates(cands, x @ a),
        )
    )
    return [(k, conds[k]) for k in ROMAN]


def projection_characterization(a: Matrix, w: Matrix, p: Matrix) -> list[tuple[str, bool]]:
    """Four equivalent ways for the projection p to be awa_w^⊕."""
    _square(a, w, p)
    x = _wcore(a, w)
    if isinstance(x, tuple):
        raise PreconditionUnmet(OrderKind.WCORE, "a", "w-core inverse")
    if not p.is_projection():
        raise PreconditionUnmet("projection", "p", "projection property (p = p^2 = p*)")
    return [
        ("i", p == a @ w @ x),
        ("ii", _col_eq(a, p)),
        ("iii", _left_ann_eq(a, p)),
        ("iv", a == p @ a and left_annihilator_contained(a, p)),
    ]


def idempotent_characterizations(
    a: Matrix, w: Matrix, candidate: Matrix, side: str = "e"
) -> list[tuple[str, bool]]:
    """Four equivalent ways for ``candidate`` to be a_w^⊕aw (side "e") or wa_w^⊕a (side "f")."""
    _square(a, w, candidate)
    x = _wcore(a, w)
    if isinstance(x, tuple):
        raise PreconditionUnmet(OrderKind.WCORE, "a", "w-core inverse")
    c = candidate
    if side == "e":
        aw = a @ w
        fixes = c @ a == a
        return [
            ("i", c == x @ aw),
            ("ii", _row_eq(c, aw) and fixes),
            ("iii", _right_ann_eq(c, aw) and fixes),
            ("iv", right_annihilator_contained(aw, c) and fixes),
        ]
    if side == "f":
        wa = w @ a
        fixes = c @ wa == wa
        return [
            ("i", c == w @ x @ a),
            ("ii", _row_eq(a, c) and fixes),
            ("iii", _right_ann_eq(a, c) and fixes),
            ("iv", right_annihilator_contained(a, c) and fixes),
        ]
    raise ValueError(f"side must be 'e' or 'f', not {side!r}")
