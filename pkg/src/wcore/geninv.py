"""Generalized inverses of square matrices, each re-verified before it is returned.

All constructors are exact. Existence is decided by rank tests over the
scalar field, so ``NotXxxInvertible`` is a verdict, not a numerical failure.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import ShapeError, WCoreError
from .matrix import (
    Matrix,
    col_space_le,
    identity,
    inverse,
    rank,
    rank_factorization,
    row_space_le,
    rref,
    star,
    zeros,
)

__all__ = [
    "GenInvKind",
    "GenInvResult",
    "InverseDoesNotExist",
    "NotGroupInvertible",
    "NotOneThreeInvertible",
    "NotOneFourInvertible",
    "NotMoorePenroseInvertible",
    "NotInvertibleAlong",
    "NotCoreInvertible",
    "NotWCoreInvertible",
    "CertificateError",
    "inner_inverse",
    "reflexive_inverse",
    "general_inner_inverse",
    "group_inverse",
    "one_three_inverse",
    "one_four_inverse",
    "moore_penrose",
    "inverse_along",
    "core_inverse",
    "w_core_inverse",
    "w_core_via_product",
    "is_ep",
    "exists",
    "equations",
    "compute",
]


class InverseDoesNotExist(WCoreError, ArithmeticError):
    reason = "NotInvertible"


class NotGroupInvertible(InverseDoesNotExist):
    reason = "NotGroupInvertible"


class NotOneThreeInvertible(InverseDoesNotExist):
    reason = "NotOneThreeInvertible"


class NotOneFourInvertible(InverseDoesNotExist):
    reason = "NotOneFourInvertible"


class NotMoorePenroseInvertible(InverseDoesNotExist):
    reason = "NotMoorePenroseInvertible"


class NotInvertibleAlong(InverseDoesNotExist):
    reason = "NotInvertibleAlong"


class NotCoreInvertible(InverseDoesNotExist):
    reason = "NotCoreInvertible"


class NotWCoreInvertible(InverseDoesNotExist):
    """Carries which existence leg failed: ``WNotInvertibleAlongA`` or ``NotOneThree``."""

    def __init__(self, reason: str, reasons: tuple[str, ...] = ()):
        super().__init__(reason)
        self.reason = reason
        self.reasons = reasons or (reason,)


class CertificateError(AssertionError):
    """A constructed inverse failed its own defining equations. Always a bug."""


class GenInvKind(enum.Enum):
    INNER = "inner"
    REFLEXIVE = "reflexive"
    GROUP = "group"
    ONE_THREE = "one3"
    ONE_FOUR = "one4"
    MOORE_PENROSE = "mp"
    INVERSE_ALONG = "along"
    CORE = "core"
    WCORE = "wcore"

    @property
    def needs_aux(self) -> bool:
        return self in (GenInvKind.INVERSE_ALONG, GenInvKind.WCORE)

    @property
    def unique(self) -> bool:
        return self not in (GenInvKind.INNER, GenInvKind.REFLEXIVE, GenInvKind.ONE_THREE, GenInvKind.ONE_FOUR)


@dataclass(frozen=True)
class GenInvResult:
    kind: GenInvKind
    value: Matrix
    certificate: tuple[tuple[str, bool], ...] = field(default=())
    aux: Matrix | None = None

    @property
    def verified(self) -> bool:
        return all(ok for _, ok in self.certificate)


def _square(*ms: Matrix):
    n = ms[0].rows
    for m in ms:
        if not m.is_square or m.rows != n or m.domain != ms[0].domain:
            raise ShapeError("expected square matrices of one size and domain")


def equations(kind: GenInvKind, a: Matrix, x: Matrix, aux: Matrix | None = None) -> list[tuple[str, bool]]:
    """Evaluate the defining equations of ``kind`` for a candidate ``x``.

    For INVERSE_ALONG, ``a`` is the element being inverted and ``aux`` the
    element d it is inverted along.
    """
    ax = a @ x
    xa = x @ a
    if kind is GenInvKind.INNER:
        return [("axa=a", ax @ a == a)]
    if kind is GenInvKind.REFLEXIVE:
        return [("axa=a", ax @ a == a), ("xax=x", xa @ x == x)]
    if kind is GenInvKind.GROUP:
        return [("axa=a", ax @ a == a), ("xax=x", xa @ x == x), ("ax=xa", ax == xa)]
    if kind is GenInvKind.ONE_THREE:
        return [("axa=a", ax @ a == a), ("(ax)*=ax", star(ax) == ax)]
    if kind is GenInvKind.ONE_FOUR:
        return [("axa=a", ax @ a == a), ("(xa)*=xa", star(xa) == xa)]
    if kind is GenInvKind.MOORE_PENROSE:
        return [
            ("axa=a", ax @ a == a),
            ("xax=x", xa @ x == x),
            ("(ax)*=ax", star(ax) == ax),
            ("(xa)*=xa", star(xa) == xa),
        ]
    if kind is GenInvKind.CORE:
        return [
            ("axa=a", ax @ a == a),
            ("xax=x", xa @ x == x),
            ("ax^2=x", ax @ x == x),
            ("xa^2=a", xa @ a == a),
            ("(ax)*=ax", star(ax) == ax),
        ]
    if kind is GenInvKind.INVERSE_ALONG:
        d = aux
        return [
            ("bxd=d", x @ a @ d == d),
            ("dxb=d", d @ a @ x == d),
            ("b in dR", col_space_le(x, d)),
            ("b in Rd", row_space_le(x, d)),
        ]
    if kind is GenInvKind.WCORE:
        w = aux
        awx = a @ w @ x
        return [
            ("awx^2=x", awx @ x == x),
            ("xawa=a", x @ a @ w @ a == a),
            ("(awx)*=awx", star(awx) == awx),
            ("awxa=a", awx @ a == a),
            ("xawx=x", x @ awx == x),
        ]
    raise ValueError(f"unknown kind {kind}")


def _certify(kind: GenInvKind, a: Matrix, x: Matrix, aux: Matrix | None = None) -> Matrix:
    cert = equations(kind, a, x, aux)
    bad = [name for name, ok in cert if not ok]
    if bad:
        raise CertificateError(f"{kind.value} inverse failed {bad} for a={a} aux={aux}")
    return x


# The cached helpers return None for "does not exist" because lru_cache does
# not memoize exceptions.


@lru_cache(maxsize=1 << 16)
def _inner(a: Matrix, pivot: str) -> Matrix:
    res = rref(a, pivot)
    zero_row = (a.domain.zero,) * a.rows
    out = [zero_row] * a.cols
    for k, c in enumerate(res.pivots):
        out[c] = res.T.data[k]
    return _certify(GenInvKind.INNER, a, Matrix._make(a.domain, a.cols, a.rows, tuple(out)))


def inner_inverse(a: Matrix, pivot: str = "first") -> Matrix:
    """Canonical inner inverse Q diag(I_r, 0) P where P a Q = diag(I_r, 0).

    With T from the RREF (T a = R), row c_k of the result is row k of T for
    the k-th pivot column c_k and all other rows vanish.
    """
    return _inner(a, pivot)


def reflexive_inverse(a: Matrix, pivot: str = "first") -> Matrix:
    g = _inner(a, pivot)
    return _certify(GenInvKind.REFLEXIVE, a, g @ a @ g)


def general_inner_inverse(a: Matrix, g: Matrix, u: Matrix, v: Matrix) -> Matrix:
    """g + (1 - ga)u + v(1 - ag): every inner inverse of a arises this way from one g."""
    one = identity(a.domain, a.rows)
    return _certify(GenInvKind.INNER, a, g + (one - g @ a) @ u + v @ (one - a @ g))


@lru_cache(maxsize=1 << 16)
def _group(a: Matrix) -> Matrix | None:
    F, G, r = rank_factorization(a)
    if r == 0:
        return zeros(a.domain, a.rows)
    gf = G @ F
    if rank(gf) < r:
        return None
    gfi = inverse(gf)
    return _certify(GenInvKind.GROUP, a, F @ gfi @ gfi @ G)


def group_inverse(a: Matrix) -> Matrix:
    """F (GF)^-2 G for a rank factorization a = FG; exists iff rank(a^2) = rank(a)."""
    _square(a)
    x = _group(a)
    if x is None:
        raise NotGroupInvertible(f"rank(a^2) < rank(a) for a={a}")
    return x


@lru_cache(maxsize=1 << 16)
def _one_three(a: Matrix, pivot: str) -> Matrix | None:
    sa = star(a)
    m = sa @ a
    if rank(m) != rank(a):
        return None
    return _certify(GenInvKind.ONE_THREE, a, _inner(m, pivot) @ sa)


def one_three_inverse(a: Matrix, pivot: str = "first") -> Matrix:
    """g a* with g an inner inverse of a*a; exists iff rank(a*a) = rank(a)."""
    x = _one_three(a, pivot)
    if x is None:
        raise NotOneThreeInvertible(f"rank(a*a) < rank(a) for a={a}")
    return x


@lru_cache(maxsize=1 << 16)
def _one_four(a: Matrix, pivot: str) -> Matrix | None:
    sa = star(a)
    m = a @ sa
    if rank(m) != rank(a):
        return None
    return _certify(GenInvKind.ONE_FOUR, a, sa @ _inner(m, pivot))


def one_four_inverse(a: Matrix, pivot: str = "first") -> Matrix:
    """a* g with g an inner inverse of aa*; exists iff rank(aa*) = rank(a)."""
    x = _one_four(a, pivot)
    if x is None:
        raise NotOneFourInvertible(f"rank(aa*) < rank(a) for a={a}")
    return x


@lru_cache(maxsize=1 << 16)
def _mp(a: Matrix, pivot: str) -> Matrix | None:
    x13 = _one_three(a, pivot)
    x14 = _one_four(a, pivot)
    if x13 is None or x14 is None:
        return None
    return _certify(GenInvKind.MOORE_PENROSE, a, x14 @ a @ x13)


def moore_penrose(a: Matrix, pivot: str = "first") -> Matrix:
    """a^(1,4) a a^(1,3); the value does not depend on which {1,3}/{1,4} inverses are used."""
    x = _mp(a, pivot)
    if x is None:
        raise NotMoorePenroseInvertible(f"a={a} lacks a {{1,3}} or {{1,4}} inverse")
    return x


@lru_cache(maxsize=1 << 16)
def _along(x: Matrix, d: Matrix) -> Matrix | None:
    dx = d @ x
    g = _group(dx)
    if g is None or rank(dx) != rank(d):
        return None
    # rank(dx) = rank(d) together with col(dx) <= col(d) gives d in dxR
    return _certify(GenInvKind.INVERSE_ALONG, x, g @ d, d)


def inverse_along(x: Matrix, d: Matrix) -> Matrix:
    """The inverse of x along d, computed as (dx)^# d.

    Exists iff dx is group invertible and d lies in dxR.
    """
    _square(x, d)
    b = _along(x, d)
    if b is None:
        raise NotInvertibleAlong(f"x={x} is not invertible along d={d}")
    return b


@lru_cache(maxsize=1 << 16)
def _core(a: Matrix) -> Matrix | None:
    g = _group(a)
    x13 = _one_three(a, "first")
    if g is None or x13 is None:
        return None
    return _certify(GenInvKind.CORE, a, g @ a @ x13)


def core_inverse(a: Matrix) -> Matrix:
    """a^# a a^(1,3); exists iff a has both a group inverse and a {1,3}-inverse."""
    _square(a)
    x = _core(a)
    if x is None:
        raise NotCoreInvertible(f"a={a} is not core invertible")
    return x


@lru_cache(maxsize=1 << 16)
def _wcore(a: Matrix, w: Matrix) -> Matrix | tuple[str, ...]:
    along = _along(w, a)
    x13 = _one_three(a, "first")
    reasons = []
    if along is None:
        reasons.append("WNotInvertibleAlongA")
    if x13 is None:
        reasons.append("NotOneThree")
    if reasons:
        return tuple(reasons)
    return _certify(GenInvKind.WCORE, a, along @ x13, w)


def w_core_inverse(a: Matrix, w: Matrix) -> Matrix:
    """w^{||a} a^(1,3): the unique x with awx^2 = x, xawa = a and (awx)* = awx."""
    _square(a, w)
    x = _wcore(a, w)
    if isinstance(x, tuple):
        raise NotWCoreInvertible(x[0], x)
    return x


def w_core_via_product(a: Matrix, w: Matrix) -> Matrix:
    """Second route to the w-core inverse: (aw)^core, valid when aR = awR."""
    _square(a, w)
    aw = a @ w
    if not col_space_le(a, aw):
        raise NotWCoreInvertible("WNotInvertibleAlongA")
    x = _core(aw)
    if x is None:
        raise NotWCoreInvertible("WNotInvertibleAlongA" if _group(aw) is None else "NotOneThree")
    return _certify(GenInvKind.WCORE, a, x, w)


def is_ep(a: Matrix) -> bool:
    x = _mp(a, "first")
    return x is not None and a @ x == x @ a


def try_inverse(kind: GenInvKind, a: Matrix, aux: Matrix | None = None) -> Matrix | None:
    """Like :func:`compute` but returns None instead of raising when no inverse exists."""
    try:
        return _construct(kind, a, aux)
    except InverseDoesNotExist:
        return None


def exists(kind: GenInvKind, a: Matrix, aux: Matrix | None = None) -> bool:
    return try_inverse(kind, a, aux) is not None


def _construct(kind: GenInvKind, a: Matrix, aux: Matrix | None) -> Matrix:
    if kind.needs_aux and aux is None:
        raise ValueError(f"{kind.value} needs an auxiliary matrix")
    if kind is GenInvKind.INNER:
        return inner_inverse(a)
    if kind is GenInvKind.REFLEXIVE:
        return reflexive_inverse(a)
    if kind is GenInvKind.GROUP:
        return group_inverse(a)
    if kind is GenInvKind.ONE_THREE:
        return one_three_inverse(a)
    if kind is GenInvKind.ONE_FOUR:
        return one_four_inverse(a)
    if kind is GenInvKind.MOORE_PENROSE:
        return moore_penrose(a)
    if kind is GenInvKind.INVERSE_ALONG:
        return inverse_along(a, aux)
    if kind is GenInvKind.CORE:
        return core_inverse(a)
    if kind is GenInvKind.WCORE:
        return w_core_inverse(a, aux)
    raise ValueError(f"unknown kind {kind}")


def compute(kind: GenInvKind | str, a: Matrix, aux: Matrix | None = None) -> GenInvResult:
    """Construct an inverse of the given kind together with its certificate."""
    kind = GenInvKind(kind)
    x = _construct(kind, a, aux)
    return GenInvResult(kind, x, tuple(equations(kind, a, x, aux)), aux)
