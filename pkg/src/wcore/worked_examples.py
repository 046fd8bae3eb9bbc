"""The three worked 2x2 examples over Q(i), embedded so replay needs no files.

``replay()`` recomputes every displayed value and compares it exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geninv import GenInvKind, core_inverse, exists, group_inverse, w_core_inverse
from .matrix import Matrix, col_space_le, row_space_le, star
from .orders import OrderKind, order_holds
from .scalar import GAUSSIAN_RATIONALS, ScalarDomain


def _m(rows, domain: ScalarDomain = GAUSSIAN_RATIONALS) -> Matrix:
    return Matrix(domain, rows)


def example1(domain: ScalarDomain = GAUSSIAN_RATIONALS) -> dict[str, Matrix]:
    """a is below b in the w-core order but not in the core order."""
    return {
        "a": _m([[1, 1], [0, 0]], domain),
        "b": _m([[1, 1], [2, -2]], domain),
        "w": _m([[1, 0], [1, 0]], domain),
    }


def example2(domain: ScalarDomain = GAUSSIAN_RATIONALS) -> dict[str, Matrix]:
    """Left-star and right-sharp (of wa, wb) hold, yet the w-core order fails."""
    return {
        "a": _m([[1, 1], [0, 0]], domain),
        "b": _m([[1, 1], [2, 0]], domain),
        "w": _m([[1, 0], [0, 0]], domain),
    }


def reverse_order_example(domain: ScalarDomain = GAUSSIAN_RATIONALS) -> dict[str, Matrix]:
    """a = b, so a is below b, yet (ab)_w^⊕ differs from b_w^⊕ a_w^⊕."""
    return {
        "a": _m([[1, 1], [0, 0]], domain),
        "b": _m([[1, 1], [0, 0]], domain),
        "w": _m([[1, 0], [1, 0]], domain),
    }


@dataclass
class Assertion:
    example: str
    name: str
    expected: object
    actual: object

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def to_json(self) -> dict:
        def enc(v):
            return v.to_strings() if isinstance(v, Matrix) else v

        return {
            "example": self.example,
            "name": self.name,
            "expected": enc(self.expected),
            "actual": enc(self.actual),
            "ok": self.ok,
        }


def _example1() -> list[Assertion]:
    a, b, w = example1().values()
    x = w_core_inverse(a, w)
    c = core_inverse(a)
    # b itself is not w-core invertible (bw has rank 1), so only the relaxed
    # reading of the order, which needs a_w^⊕ alone, applies here.
    wc = order_holds(OrderKind.WCORE, a, b, w, mode="relaxed")
    co = order_holds(OrderKind.CORE, a, b)
    E = "example1"
    return [
        Assertion(E, "a_w^⊕", _m([["1/2", 0], [0, 0]]), x),
        Assertion(E, "a^⊕", _m([[1, 0], [0, 0]]), c),
        Assertion(E, "a_w^⊕a", _m([["1/2", "1/2"], [0, 0]]), x @ a),
        Assertion(E, "a_w^⊕b", _m([["1/2", "1/2"], [0, 0]]), x @ b),
        Assertion(E, "awa_w^⊕", _m([[1, 0], [0, 0]]), a @ w @ x),
        Assertion(E, "bwa_w^⊕", _m([[1, 0], [0, 0]]), b @ w @ x),
        Assertion(E, "aa^⊕", _m([[1, 0], [0, 0]]), a @ c),
        Assertion(E, "ba^⊕", _m([[1, 0], [2, 0]]), b @ c),
        Assertion(E, "w-core order holds", True, wc.holds),
        Assertion(E, "b is w-core invertible", False, exists(GenInvKind.WCORE, b, w)),
        Assertion(E, "core order holds", False, co.holds),
        Assertion(E, "core order failed condition", "aa^⊕ = ba^⊕", co.failed_condition),
    ]


def _example2() -> list[Assertion]:
    a, b, w = example2().values()
    x = w_core_inverse(a, w)
    wa, wb = w @ a, w @ b
    wc = order_holds(OrderKind.WCORE, a, b, w, mode="relaxed")
    E = "example2"
    return [
        Assertion(E, "a_w^⊕", _m([[1, 0], [0, 0]]), x),
        Assertion(E, "a*a", _m([[1, 1], [1, 1]]), star(a) @ a),
        Assertion(E, "a*b", _m([[1, 1], [1, 1]]), star(a) @ b),
        Assertion(E, "aR ⊆ bR", True, col_space_le(a, b)),
        Assertion(E, "left-star order holds", True, order_holds(OrderKind.LEFT_STAR, a, b).holds),
        Assertion(E, "wa", _m([[1, 1], [0, 0]]), wa),
        Assertion(E, "wb", _m([[1, 1], [0, 0]]), wb),
        Assertion(E, "R(wa) ⊆ R(wb)", True, row_space_le(wa, wb)),
        Assertion(E, "(wa)^#", _m([[1, 1], [0, 0]]), group_inverse(wa)),
        Assertion(E, "(wb)^#", _m([[1, 1], [0, 0]]), group_inverse(wb)),
        Assertion(E, "wa(wa)^#", _m([[1, 1], [0, 0]]), wa @ group_inverse(wa)),
        Assertion(E, "wb(wa)^#", _m([[1, 1], [0, 0]]), wb @ group_inverse(wa)),
        Assertion(E, "right-sharp order of wa, wb holds", True,
                  order_holds(OrderKind.RIGHT_SHARP, wa, wb).holds),
        Assertion(E, "awa_w^⊕", _m([[1, 0], [0, 0]]), a @ w @ x),
        Assertion(E, "bwa_w^⊕", _m([[1, 0], [2, 0]]), b @ w @ x),
        Assertion(E, "w-core order holds", False, wc.holds),
        Assertion(E, "b is w-core invertible", False, exists(GenInvKind.WCORE, b, w)),
        Assertion(E, "w-core order failed condition", "awa_w^⊕ = bwa_w^⊕", wc.failed_condition),
    ]


def _reverse() -> list[Assertion]:
    a, b, w = reverse_order_example().values()
    xa = w_core_inverse(a, w)
    xb = w_core_inverse(b, w)
    xab = w_core_inverse(a @ b, w)
    E = "reverse_order"
    return [
        Assertion(E, "a_w^⊕", _m([["1/2", 0], [0, 0]]), xa),
        Assertion(E, "b_w^⊕", _m([["1/2", 0], [0, 0]]), xb),
        Assertion(E, "(ab)_w^⊕", _m([["1/2", 0], [0, 0]]), xab),
        Assertion(E, "a_w^⊕a = a_w^⊕b", _m([["1/2", "1/2"], [0, 0]]), xa @ b),
        Assertion(E, "awa_w^⊕ = bwa_w^⊕", _m([[1, 0], [0, 0]]), b @ w @ xa),
        Assertion(E, "w-core order holds", True, order_holds(OrderKind.WCORE, a, b, w).holds),
        Assertion(E, "b_w^⊕a_w^⊕", _m([["1/4", 0], [0, 0]]), xb @ xa),
        Assertion(E, "(ab)_w^⊕ = b_w^⊕a_w^⊕", False, xab == xb @ xa),
        Assertion(E, "(awb)_w^⊕", _m([["1/4", 0], [0, 0]]), w_core_inverse(a @ w @ b, w)),
    ]


def replay() -> list[Assertion]:
    """Recompute all three examples; every returned assertion should be ``ok``."""
    return _example1() + _example2() + _reverse()
