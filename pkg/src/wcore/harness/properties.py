"""One executable checker per result about the w-core order.

A checker takes an :class:`Instance` and returns a :class:`PropertyOutcome`:
INAPPLICABLE when the hypothesis is unmet, FAILS with the offending clause,
or HOLDS. Implications whose antecedent is false count as inapplicable, so
applicable counts measure real exercise of each statement.

Existential conditions are decided over ``Context.search`` when one is given
(every element of a finite ring), otherwise by the canonical witnesses plus
whatever candidates the instance carries.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Sequence

from ..errors import UnknownProperty
from ..geninv import _along, _core, _group, _mp, _one_three, _wcore, is_ep, w_core_via_product
from ..matrix import (
    Matrix,
    col_space_le,
    identity,
    is_unit,
    left_annihilator_contained,
    right_annihilator_contained,
    row_space_le,
    star,
    zeros,
)
from ..orders import (
    OrderKind,
    PreconditionUnmet,
    core_characterizations,
    holds,
    idempotent_characterizations,
    order_holds,
    projection_characterization,
    w_core_characterizations,
)
from ..worked_examples import example2, reverse_order_example
from .generators import Instance


class PropertyId(enum.Enum):
    DEF_WCORE_RELATION = "DEF_WCORE_RELATION"
    LEM_WCORE_PAR_I = "LEM_WCORE_PAR_I"
    LEM_WCORE_PAR_II = "LEM_WCORE_PAR_II"
    LEM_WCORE_PAR_III = "LEM_WCORE_PAR_III"
    LEM_WCORE_PAR_IV = "LEM_WCORE_PAR_IV"
    THM_PARTIAL_ORDER_AXIOMS = "THM_PARTIAL_ORDER_AXIOMS"
    PROP_SYMMETRIC_CHAR = "PROP_SYMMETRIC_CHAR"
    PROP_MIXED_PRODUCTS = "PROP_MIXED_PRODUCTS"
    LEM_PROJECTION = "LEM_PROJECTION"
    THM_PROJECTION_6WAY = "THM_PROJECTION_6WAY"
    LEM_IDEMPOTENT_E = "LEM_IDEMPOTENT_E"
    LEM_IDEMPOTENT_F = "LEM_IDEMPOTENT_F"
    LEM_MARY_CRITERION = "LEM_MARY_CRITERION"
    THM_IDEMPOTENT_11WAY = "THM_IDEMPOTENT_11WAY"
    THM_WCORE_12WAY = "THM_WCORE_12WAY"
    COR_CORE_12WAY = "COR_CORE_12WAY"
    PROP_IMPLIES_LEFTSTAR_RIGHTSHARP = "PROP_IMPLIES_LEFTSTAR_RIGHTSHARP"
    EX2_CONVERSE_FAILS = "EX2_CONVERSE_FAILS"
    THM_UNIT_EQUIVALENCE = "THM_UNIT_EQUIVALENCE"
    THM_LEFTSTAR_4WAY = "THM_LEFTSTAR_4WAY"
    THM_RIGHTSHARP_3WAY = "THM_RIGHTSHARP_3WAY"
    LEM_AW_PRODUCT = "LEM_AW_PRODUCT"
    THM_WCORE_IFF_AW_CORE = "THM_WCORE_IFF_AW_CORE"
    THM_THREECLASS_CORE = "THM_THREECLASS_CORE"
    THM_THREECLASS_STAR = "THM_THREECLASS_STAR"
    THM_EP_5WAY = "THM_EP_5WAY"
    PROP_IMPLIES_DIAMOND = "PROP_IMPLIES_DIAMOND"
    THM_DIFFERENCE_3WAY = "THM_DIFFERENCE_3WAY"
    COR_DIFFERENCE_CORE = "COR_DIFFERENCE_CORE"
    COR_DIFFERENCE_ACORE = "COR_DIFFERENCE_ACORE"
    THM_REVERSE_ORDER = "THM_REVERSE_ORDER"
    EX_REVERSE_COUNTEREXAMPLE = "EX_REVERSE_COUNTEREXAMPLE"

    @classmethod
    def parse(cls, name: str) -> "PropertyId":
        try:
            return cls(name.strip().upper())
        except ValueError:
            raise UnknownProperty(f"unknown property id {name!r}") from None


class Verdict(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    INAPPLICABLE = "inapplicable"


@dataclass
class PropertyOutcome:
    id: PropertyId
    verdict: Verdict
    clause: str | None = None
    instance: Instance | None = None
    positive: bool = False

    def to_json(self) -> dict:
        out = {"id": self.id.value, "verdict": self.verdict.value, "positive": self.positive}
        if self.clause is not None:
            out["clause"] = self.clause
        if self.instance is not None:
            out["instance"] = self.instance.to_json()
        return out


@dataclass(frozen=True)
class Context:
    """Shared evaluation settings; ``search`` enumerates candidate witnesses."""

    search: tuple[Matrix, ...] | None = None


class _Inapplicable(Exception):
    pass


class _Failed(Exception):
    pass


def _gate(cond: bool, reason: str):
    if not cond:
        raise _Inapplicable(reason)


def _require(cond: bool, clause: str):
    if not cond:
        raise _Failed(clause)


def _agree(conds: Sequence[tuple[str, bool]], what: str) -> bool:
    """All booleans equal; returns their common value."""
    values = {v for _, v in conds}
    if len(values) > 1:
        detail = ", ".join(f"{k}={v}" for k, v in conds)
        raise _Failed(f"{what} disagree: {detail}")
    return values.pop()


# -- shared predicates --------------------------------------------------------


def _wc(a: Matrix, w: Matrix) -> Matrix | None:
    x = _wcore(a, w)
    return None if isinstance(x, tuple) else x


def _wle(a: Matrix, b: Matrix, w: Matrix) -> bool:
    """a below b in the w-core order, requiring only a_w^⊕ (relaxed reading)."""
    x = _wc(a, w)
    return x @ a == x @ b and a @ w @ x == b @ w @ x


def _core_le(a, b) -> bool:
    x = _core(a)
    return x @ a == x @ b and a @ x == b @ x


def _left_star(a, b) -> bool:
    sa = star(a)
    return sa @ a == sa @ b and col_space_le(a, b)


def _right_sharp(a, b) -> bool:
    g = _group(a)
    return g is not None and a @ g == b @ g and row_space_le(a, b)


def _sharp(a, b) -> bool:
    g = _group(a)
    return g is not None and g @ a == g @ b and a @ g == b @ g


def _star_le(a, b) -> bool:
    sa = star(a)
    return sa @ a == sa @ b and a @ sa == b @ sa


def _diamond(a, b) -> bool:
    return a @ star(a) @ a == a @ star(b) @ a and col_space_le(a, b) and row_space_le(a, b)


def _one(a: Matrix) -> Matrix:
    return identity(a.domain, a.rows)


def _need_a(inst: Instance) -> Matrix:
    x = _wc(inst.a, inst.w)
    _gate(x is not None, "a is not w-core invertible")
    return x


def _need_ab(inst: Instance) -> tuple[Matrix, Matrix]:
    xa = _need_a(inst)
    xb = _wc(inst.b, inst.w)
    _gate(xb is not None, "b is not w-core invertible")
    return xa, xb


def _projections(ctx: Context, extra: Sequence[Matrix | None]) -> list[Matrix]:
    pool = list(ctx.search) if ctx.search is not None else [m for m in extra if m is not None]
    return [p for p in pool if p.is_projection()]


def _candidates(ctx: Context, extra: Sequence[Matrix | None]) -> list[Matrix]:
    return list(ctx.search) if ctx.search is not None else [m for m in extra if m is not None]


# -- checkers -----------------------------------------------------------------
# Each returns the "positive" flag: whether the principal relation held, so
# reports can show that both sides of an equivalence were exercised.


def _def_relation(inst, ctx):
    a, b, w = inst.a, inst.b, inst.w
    x = _need_a(inst)
    expected = x @ a == x @ b and a @ w @ x == b @ w @ x
    relaxed = order_holds(OrderKind.WCORE, a, b, w, mode="relaxed")
    _require(relaxed.holds == expected, "relaxed verdict differs from the defining equations")
    relaxed.check_witnesses(a, b, w)
    if _wc(b, w) is None:
        try:
            order_holds(OrderKind.WCORE, a, b, w, mode="strict")
        except PreconditionUnmet:
            return expected
        raise _Failed("strict mode accepted b without a w-core inverse")
    strict = order_holds(OrderKind.WCORE, a, b, w, mode="strict")
    _require(strict.holds == expected, "strict verdict differs from the defining equations")
    return expected


def _par_hyp(inst):
    xa, xb = _need_ab(inst)
    _gate(_wle(inst.a, inst.b, inst.w), "a is not below b")
    return xa, xb


def _par_i(inst, ctx):
    xa, xb = _par_hyp(inst)
    _require(xa @ inst.a == xb @ inst.a, "a_w^⊕a = b_w^⊕a")
    return True


def _par_ii(inst, ctx):
    xa, xb = _par_hyp(inst)
    a, w = inst.a, inst.w
    _require(a @ w @ xa == a @ w @ xb, "awa_w^⊕ = awb_w^⊕")
    return True


def _par_iii(inst, ctx):
    xa, xb = _par_hyp(inst)
    a, w = inst.a, inst.w
    _require(a @ w @ xb @ a == a, "awb_w^⊕a = a")
    return True


def _par_iv(inst, ctx):
    xa, xb = _par_hyp(inst)
    _require(xb @ xa == xa @ xa, "b_w^⊕a_w^⊕ = (a_w^⊕)^2")
    return True


def _axioms(inst, ctx):
    a, b, c, w = inst.a, inst.b, inst.c, inst.w
    _need_a(inst)
    zero = zeros(a.domain, a.rows)
    _require(_wle(a, a, w), "reflexivity")
    _require(_wle(zero, a, w), "zero is below every w-core invertible element")
    if _wc(b, w) is None:
        return False
    ab, ba = _wle(a, b, w), _wle(b, a, w)
    if ab and ba:
        _require(a == b, "antisymmetry")
    if c is None or _wc(c, w) is None:
        return False
    if ab and _wle(b, c, w):
        _require(_wle(a, c, w), "transitivity")
        return True
    return False


def _symmetric(inst, ctx):
    a, b, w = inst.a, inst.b, inst.w
    xa, xb = _need_ab(inst)
    left = _wle(a, b, w)
    right = xa @ b == xb @ a and b @ w @ xa == a @ w @ xb and a @ w @ xb @ a == a
    _agree([("i", left), ("ii", right)], "conditions")
    return left


def _mixed(inst, ctx):
    a, b, w = inst.a, inst.b, inst.w
    xa, xb = _par_hyp(inst)
    _require(xa @ b @ w @ xb == xa, "a_w^⊕bwb_w^⊕ = a_w^⊕")
    _require(xb @ b @ w @ xa == xa, "b_w^⊕bwa_w^⊕ = a_w^⊕")
    _require(xa @ b @ w @ xa == xa, "a_w^⊕bwa_w^⊕ = a_w^⊕")
    _require(xa @ a @ w @ xb == xa, "a_w^⊕awb_w^⊕ = a_w^⊕")
    _require(xb @ a @ w @ xa == xa, "b_w^⊕awa_w^⊕ = a_w^⊕")
    _require(xb @ a @ w @ xb == xa, "b_w^⊕awb_w^⊕ = a_w^⊕")
    return True


def _projection_lemma(inst, ctx):
    a, w = inst.a, inst.w
    x = _need_a(inst)
    one = _one(a)
    cands = _projections(ctx, [a @ w @ x, inst.c, one, zeros(a.domain, a.rows)])
    hit = False
    for p in cands:
        v = _agree(projection_characterization(a, w, p), f"conditions for p={p.to_strings()}")
        hit = hit or v
    _require(hit, "no candidate projection satisfies the conditions")
    return True


def _projection_6way(inst, ctx):
    a, b, w = inst.a, inst.b, inst.w
    x = _need_a(inst)
    along = _along(w, a)
    a13 = _one_three(a, "first")
    sa = star(a)
    p0 = a @ w @ x
    projs = _projections(ctx, [p0, inst.c])
    conds = [
        ("i", x @ a == x @ b),
        ("ii", along == along @ a13 @ b),
        ("iii", sa @ a == sa @ b),
        ("iv", a == p0 @ b),
        ("v", any(col_space_le(a, p) and col_space_le(p, a) and p @ a == p @ b for p in projs)),
        ("vi", any(left_annihilator_contained(a, p) and left_annihilator_contained(p, a)
                   and p @ a == p @ b for p in projs)),
    ]
    return _agree(conds, "conditions")


def _idempotent(side):
    def check(inst, ctx):
        a, w = inst.a, inst.w
        x = _need_a(inst)
        canonical = x @ a @ w if side == "e" else w @ x @ a
        cands = _candidates(ctx, [canonical, inst.c, _one(a), zeros(a.domain, a.rows)])
        hit = False
        for c in cands:
            hit = _agree(idempotent_characterizations(a, w, c, side),
                         f"conditions for {side}={c.to_strings()}") or hit
        _require(hit, f"no candidate satisfies the {side}-conditions")
        return True

    return check


def _mary(inst, ctx):
    a, w = inst.a, inst.w
    along = _along(w, a)
    aw, wa = a @ w, w @ a
    g_aw, g_wa = _group(aw), _group(wa)
    conds = [
        ("i", along is not None),
        ("ii", col_space_le(a, aw) and g_aw is not None),
        ("iii", row_space_le(a, wa) and g_wa is not None),
    ]
    ok = _agree(conds, "conditions")
    if ok:
        _require(along == a @ g_wa, "w^||a = a(wa)^#")
        _require(along == g_aw @ a, "w^||a = (aw)^#a")
        # the defining equations of the inverse along a, checked independently
        _require(along @ w @ a == a and a @ w @ along == a, "w^||a w a = a = a w w^||a")
        _require(col_space_le(along, a) and row_space_le(along, a), "w^||a in aR and Ra")
    return ok


def _idempotent_11way(inst, ctx):
    a, b, w = inst.a, inst.b, inst.w
    x = _need_a(inst)
    aw, wa = a @ w, w @ a
    along = _along(w, a)
    g = _group(wa)
    e0, f0 = x @ a @ w, w @ x @ a
    e_cands = _candidates(ctx, [e0, inst.c])
    f_cands = _candidates(ctx, [f0, inst.c])

    def e_ok(e, rel):
        return e @ a == a and aw @ e == b @ w @ e and rel(e)

    def f_ok(f, rel):
        return a @ f == b @ f and f @ wa == wa and rel(f)

    conds = [
        ("i", a @ w @ x == b @ w @ x),
        ("ii", a == b @ w @ along),
        ("iii", a @ wa == b @ wa),
        ("iv", a @ g == b @ g),
        ("v", a == b @ w @ x @ a),
        ("vi", any(e_ok(e, lambda e: row_space_le(e, aw) and row_space_le(aw, e)) for e in e_cands)),
        ("vii", any(e_ok(e, lambda e: right_annihilator_contained(e, aw)
                         and right_annihilator_contained(aw, e)) for e in e_cands)),
        ("viii", any(e_ok(e, lambda e: right_annihilator_contained(aw, e)) for e in e_cands)),
        ("ix", any(f_ok(f, lambda f: row_space_le(a, f) and row_space_le(f, a)) for f in f_cands)),
        ("x", any(f_ok(f, lambda f: right_annihilator_contained(a, f)
                      and right_annihilator_contained(f, a)) for f in f_cands)),
        ("xi", any(f_ok(f, lambda f: right_annihilator_contained(a, f)) for f in f_cands)),
    ]
    return _agree(conds, "conditions")


def _wcore_12way(inst, ctx):
    a, b, w = inst.a, inst.b, inst.w
    _need_a(inst)
    conds = w_core_characterizations(a, b, w, search=ctx.search)
    v = _agree(conds, "conditions")
    _require(order_holds(OrderKind.WCORE, a, b, w, mode="relaxed").holds == v,
             "order verdict differs from the characterizations")
    return v


def _core_12way(inst, ctx):
    a, b = inst.a, inst.b
    _gate(_core(a) is not None, "a is not core invertible")
    conds = core_characterizations(a, b, search=ctx.search)
    v = _agree(conds, "conditions")
    _require(order_holds(OrderKind.CORE, a, b).holds == v, "order verdict differs from the characterizations")
    return v


def _implies_ls_rs(inst, ctx):
    a, b, w = inst.a, inst.b, inst.w
    _need_a(inst)
    _gate(_wle(a, b, w), "a is not below b")
    _require(_left_star(a, b), "left-star order of a, b")
    # The right-sharp half needs b_w^⊕ as well; without it Rwa ⊆ Rwb can fail.
    if _wc(b, w) is not None:
        _require(_right_sharp(w @ a, w @ b), "right-sharp order of wa, wb")
    return True


def _ex2(inst, ctx):
    a, b, w = inst.a, inst.b, inst.w
    _need_a(inst)
    _require(_left_star(a, b), "left-star order holds")
    _require(_right_sharp(w @ a, w @ b), "right-sharp order of wa, wb holds")
    _require(not _wle(a, b, w), "w-core order fails")
    return True


def _unit_equivalence(inst, ctx):
    a, b, w = inst.a, inst.b, inst.w
    _gate(is_unit(w), "w is not a unit")
    _need_a(inst)
    conds = [("i", _wle(a, b, w)), ("ii", _left_star(a, b) and _right_sharp(w @ a, w @ b))]
    return _agree(conds, "conditions")


def _leftstar_4way(inst, ctx):
    a, b, w = inst.a, inst.b, inst.w
    xa, xb = _need_ab(inst)
    ls = _left_star(a, b)
    conds = [
        ("i", _wle(a, b, w)),
        ("ii", ls and a == b @ w @ xa @ b),
        ("iii", ls and xa == xb @ a @ w @ xa),
        ("iv", ls and xa == xb @ a @ w @ xb),
    ]
    return _agree(conds, "conditions")


def _rightsharp_3way(inst, ctx):
    a, b, w = inst.a, inst.b, inst.w
    _gate(is_unit(w), "w is not a unit")
    xa, xb = _need_ab(inst)
    rs = _right_sharp(w @ a, w @ b)
    conds = [
        ("i", _wle(a, b, w)),
        ("ii", rs and a == b @ w @ xa @ b),
        ("iii", rs and xa == xa @ a @ w @ xb),
    ]
    return _agree(conds, "conditions")


def _aw_product(inst, ctx):
    a, w = inst.a, inst.w
    aw = a @ w
    x = _wc(a, w)
    y = _core(aw)
    conds = [("w-core invertible", x is not None), ("aR = awR, aw core invertible", col_space_le(a, aw) and y is not None)]
    ok = _agree(conds, "conditions")
    if ok:
        _require(x == y, "a_w^⊕ = (aw)^⊕")
        _require(w_core_via_product(a, w) == x, "product route agrees")
    return ok


def _wcore_iff_aw_core(inst, ctx):
    a, b, w = inst.a, inst.b, inst.w
    _gate(is_unit(w), "w is not a unit")
    _need_a(inst)
    aw, bw = a @ w, b @ w
    _require(_core(aw) is not None, "aw is core invertible")
    conds = [
        ("i", _wle(a, b, w)),
        ("ii", _core_le(aw, bw)),
        ("iii", _left_star(a, b) and _right_sharp(w @ a, w @ b)),
    ]
    return _agree(conds, "conditions")


def _threeclass_core(inst, ctx):
    a, b = inst.a, inst.b
    one = _one(a)
    _agree([
        ("a core invertible", _core(a) is not None),
        ("a in R_a^⊕", _wc(a, a) is not None),
        ("a in R_1^⊕", _wc(a, one) is not None),
    ], "existence conditions")
    _gate(_core(a) is not None, "a is not core invertible")
    _require(_wc(a, one) == _core(a), "a_1^⊕ = a^⊕")
    conds = [("core", _core_le(a, b)), ("w = a", _wle(a, b, a)), ("w = 1", _wle(a, b, one))]
    return _agree(conds, "conditions")


def _threeclass_star(inst, ctx):
    a, b = inst.a, inst.b
    sa = star(a)
    mp = _mp(a, "first")
    _agree([("a MP invertible", mp is not None), ("a in R_{a*}^⊕", _wc(a, sa) is not None)],
           "existence conditions")
    _gate(mp is not None, "a is not Moore-Penrose invertible")
    _require(_wc(a, sa) == star(mp) @ mp, "a_{a*}^⊕ = (a^†)*a^†")
    conds = [("star", _star_le(a, b)), ("w = a*", _wle(a, b, sa))]
    return _agree(conds, "conditions")


def _ep_5way(inst, ctx):
    a, b = inst.a, inst.b
    _gate(is_ep(a), "a is not EP")
    conds = [
        ("i", _wle(a, b, a)),
        ("ii", _wle(a, b, star(a))),
        ("iii", _core_le(a, b)),
        ("iv", _star_le(a, b)),
        ("v", _sharp(a, b)),
    ]
    return _agree(conds, "conditions")


def _implies_diamond(inst, ctx):
    a, b, w = inst.a, inst.b, inst.w
    _need_a(inst)
    _gate(_wle(a, b, w), "a is not below b")
    _require(_diamond(a, b), "diamond order")
    return True


def _difference_3way(inst, ctx):
    a, b, w = inst.a, inst.b, inst.w
    _gate(a @ w @ b == b @ w @ a, "awb != bwa")
    _need_ab(inst)
    _gate(_wc(a - b, w) is not None, "a - b is not w-core invertible")
    conds = [
        ("i", _wle(a, b, w)),
        ("ii", _wle(b - a, b, w)),
        ("iii", _left_star(a, b) and _sharp(w @ a, w @ b)),
    ]
    return _agree(conds, "conditions")


def _core_hyp(a, b):
    _gate(_core(a) is not None, "a is not core invertible")
    _gate(_core(b) is not None, "b is not core invertible")
    _gate(_core(a - b) is not None, "a - b is not core invertible")


def _difference_core(inst, ctx):
    a, b = inst.a, inst.b
    _core_hyp(a, b)
    comm = a @ b == b @ a
    conds = [
        ("i", _core_le(a, b) and comm),
        ("ii", _core_le(b - a, b) and comm),
        ("iii", _left_star(a, b) and _sharp(a, b)),
    ]
    return _agree(conds, "conditions")


def _difference_acore(inst, ctx):
    a, b = inst.a, inst.b
    _gate(a @ a @ b == b @ a @ a, "a^2 b != b a^2")
    _core_hyp(a, b)
    conds = [
        ("i", _core_le(a, b)),
        ("ii", _core_le(b - a, b)),
        ("iii", _left_star(a, b) and _sharp(a @ a, a @ b)),
    ]
    return _agree(conds, "conditions")


def _reverse_order(inst, ctx):
    a, b, w = inst.a, inst.b, inst.w
    xa, xb = _par_hyp(inst)
    y = _wc(a @ w @ b, w)
    _require(y is not None, "awb is w-core invertible")
    _require(y == xb @ xa, "(awb)_w^⊕ = b_w^⊕a_w^⊕")
    return True


def _reverse_example(inst, ctx):
    a, b, w = inst.a, inst.b, inst.w
    xa, xb = _need_ab(inst)
    _require(_wle(a, b, w), "a is below b")
    ab = _wc(a @ b, w)
    _require(ab is not None, "ab is w-core invertible")
    _require(ab != xb @ xa, "(ab)_w^⊕ differs from b_w^⊕a_w^⊕")
    _require(_wc(a @ w @ b, w) == xb @ xa, "(awb)_w^⊕ = b_w^⊕a_w^⊕")
    return True


@dataclass(frozen=True)
class PropertySpec:
    id: PropertyId
    description: str
    checker: Callable[[Instance, Context], bool]
    signature: str  # exhaustive shape: "aw", "ab", "abw", "abcw" or "fixed"
    generator: str
    fixed: Callable[[], Instance] | None = None


def _fixed(example):
    def make():
        m = example()
        return Instance(m["a"], m["b"], m["w"], tag="embedded")

    return make


P = PropertyId
CATALOG: dict[PropertyId, PropertySpec] = {s.id: s for s in [
    PropertySpec(P.DEF_WCORE_RELATION,
                 "The order verdict matches its two defining equations; strict mode rejects b without a w-core inverse.",
                 _def_relation, "abw", "wcore_a"),
    PropertySpec(P.LEM_WCORE_PAR_I, "If a is below b then a_w^⊕a = b_w^⊕a.", _par_i, "abw", "wcore_ab"),
    PropertySpec(P.LEM_WCORE_PAR_II, "If a is below b then awa_w^⊕ = awb_w^⊕.", _par_ii, "abw", "wcore_ab"),
    PropertySpec(P.LEM_WCORE_PAR_III, "If a is below b then awb_w^⊕a = a.", _par_iii, "abw", "wcore_ab"),
    PropertySpec(P.LEM_WCORE_PAR_IV, "If a is below b then b_w^⊕a_w^⊕ = (a_w^⊕)^2.", _par_iv, "abw", "wcore_ab"),
    PropertySpec(P.THM_PARTIAL_ORDER_AXIOMS,
                 "Reflexivity, antisymmetry and transitivity on w-core invertible elements; zero is the least element.",
                 _axioms, "abcw", "chain"),
    PropertySpec(P.PROP_SYMMETRIC_CHAR,
                 "For a, b both w-core invertible: a below b iff a_w^⊕b = b_w^⊕a, bwa_w^⊕ = awb_w^⊕ and awb_w^⊕a = a.",
                 _symmetric, "abw", "wcore_ab"),
    PropertySpec(P.PROP_MIXED_PRODUCTS,
                 "If a is below b, six mixed products of a, b and their w-core inverses collapse to a_w^⊕.",
                 _mixed, "abw", "wcore_ab"),
    PropertySpec(P.LEM_PROJECTION,
                 "A projection p equals awa_w^⊕ iff aR = pR iff their left annihilators agree iff a = pa with one inclusion.",
                 _projection_lemma, "aw", "pair_proj"),
    PropertySpec(P.THM_PROJECTION_6WAY,
                 "Six equivalent forms of a_w^⊕a = a_w^⊕b, among them a*a = a*b.",
                 _projection_6way, "abw", "wcore_a"),
    PropertySpec(P.LEM_IDEMPOTENT_E,
                 "e equals a_w^⊕aw iff ea = a together with Re = Raw, or equal right annihilators, or one inclusion.",
                 _idempotent("e"), "aw", "pair_idem"),
    PropertySpec(P.LEM_IDEMPOTENT_F,
                 "f equals wa_w^⊕a iff fwa = wa together with Ra = Rf, or equal right annihilators, or one inclusion.",
                 _idempotent("f"), "aw", "pair_idem"),
    PropertySpec(P.LEM_MARY_CRITERION,
                 "w is invertible along a iff a in awR with aw group invertible iff a in Rwa with wa group invertible.",
                 _mary, "aw", "pair"),
    PropertySpec(P.THM_IDEMPOTENT_11WAY,
                 "Eleven equivalent forms of awa_w^⊕ = bwa_w^⊕, among them awa = bwa.",
                 _idempotent_11way, "abw", "wcore_a"),
    PropertySpec(P.THM_WCORE_12WAY,
                 "Twelve equivalent characterizations of the w-core order when a is w-core invertible.",
                 _wcore_12way, "abw", "wcore_a"),
    PropertySpec(P.COR_CORE_12WAY,
                 "Twelve equivalent characterizations of the core order when a is core invertible.",
                 _core_12way, "ab", "core_a"),
    PropertySpec(P.PROP_IMPLIES_LEFTSTAR_RIGHTSHARP,
                 "The w-core order gives the left-star order of a, b, and the right-sharp order of wa, wb once b is also w-core invertible.",
                 _implies_ls_rs, "abw", "wcore_a"),
    PropertySpec(P.EX2_CONVERSE_FAILS,
                 "On the embedded 2x2 instance left-star and right-sharp hold while the w-core order fails.",
                 _ex2, "fixed", "fixed", _fixed(example2)),
    PropertySpec(P.THM_UNIT_EQUIVALENCE,
                 "For a unit w: w-core order iff left-star order of a, b and right-sharp order of wa, wb.",
                 _unit_equivalence, "abw", "unit_w"),
    PropertySpec(P.THM_LEFTSTAR_4WAY,
                 "For a, b both w-core invertible: four equivalent forms built on the left-star order.",
                 _leftstar_4way, "abw", "wcore_ab"),
    PropertySpec(P.THM_RIGHTSHARP_3WAY,
                 "For a, b both w-core invertible and a unit w: three equivalent forms built on the right-sharp order.",
                 _rightsharp_3way, "abw", "unit_w_ab"),
    PropertySpec(P.LEM_AW_PRODUCT,
                 "a is w-core invertible iff aR = awR and aw is core invertible; then a_w^⊕ = (aw)^⊕.",
                 _aw_product, "aw", "pair"),
    PropertySpec(P.THM_WCORE_IFF_AW_CORE,
                 "For a unit w: w-core order of a, b iff core order of aw, bw iff left-star plus right-sharp.",
                 _wcore_iff_aw_core, "abw", "unit_w"),
    PropertySpec(P.THM_THREECLASS_CORE,
                 "For core invertible a the core order equals the w-core order with w = a and with w = 1.",
                 _threeclass_core, "ab", "core_a"),
    PropertySpec(P.THM_THREECLASS_STAR,
                 "For Moore-Penrose invertible a the star order equals the w-core order with w = a*.",
                 _threeclass_star, "ab", "mp_a"),
    PropertySpec(P.THM_EP_5WAY,
                 "For EP a the w-core orders with w = a and w = a*, the core, star and sharp orders coincide.",
                 _ep_5way, "ab", "ep_a"),
    PropertySpec(P.PROP_IMPLIES_DIAMOND,
                 "The w-core order gives the diamond order.",
                 _implies_diamond, "abw", "wcore_a"),
    PropertySpec(P.THM_DIFFERENCE_3WAY,
                 "With awb = bwa and a, b, a - b w-core invertible: a below b iff b - a below b iff left-star plus sharp of wa, wb.",
                 _difference_3way, "abw", "commuting"),
    PropertySpec(P.COR_DIFFERENCE_CORE,
                 "With a, b, a - b core invertible: core order plus commuting iff the same for b - a iff left-star plus sharp.",
                 _difference_core, "ab", "commuting_core"),
    PropertySpec(P.COR_DIFFERENCE_ACORE,
                 "With a^2b = ba^2 and a, b, a - b core invertible: core order iff core order of b - a iff left-star plus a^2 sharp-below ab.",
                 _difference_acore, "ab", "commuting_acore"),
    PropertySpec(P.THM_REVERSE_ORDER,
                 "If a is below b then awb is w-core invertible with inverse b_w^⊕a_w^⊕.",
                 _reverse_order, "abw", "wcore_ab"),
    PropertySpec(P.EX_REVERSE_COUNTEREXAMPLE,
                 "On the embedded 2x2 instance a is below b yet (ab)_w^⊕ differs from b_w^⊕a_w^⊕.",
                 _reverse_example, "fixed", "fixed", _fixed(reverse_order_example)),
]}


def check_property(pid: PropertyId | str, inst: Instance, ctx: Context | None = None) -> PropertyOutcome:
    """Evaluate one result on one instance; every outcome is data, never an exception."""
    if isinstance(pid, str):
        pid = PropertyId.parse(pid)
    spec = CATALOG[pid]
    ctx = ctx or Context()
    try:
        positive = bool(spec.checker(inst, ctx))
    except _Inapplicable as exc:
        return PropertyOutcome(pid, Verdict.INAPPLICABLE, str(exc))
    except _Failed as exc:
        return PropertyOutcome(pid, Verdict.FAILS, str(exc), inst)
    return PropertyOutcome(pid, Verdict.HOLDS, positive=positive)
