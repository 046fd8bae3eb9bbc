"""Exhaustive oracles over the finite *-rings M_n(Z_p) with transpose.

Every candidate x in the ring is tested against the defining equations of an
inverse kind at once, using numpy integer arrays reduced mod p. Nothing here
calls the constructors in ``geninv``; that independence is the point.
"""

from __future__ import annotations

import itertools
from typing import Iterator

import numpy as np

from ..errors import DomainError, OracleInfeasible
from ..geninv import GenInvKind
from ..matrix import Matrix
from ..scalar import MOD_P, ScalarDomain, mod_p

DEFAULT_BUDGET = 10**6


def _check_domain(domain: ScalarDomain):
    if domain.kind != MOD_P:
        raise DomainError(f"exhaustive enumeration needs a mod_p domain, not {domain.name}")


def ring_size(p: int, n: int) -> int:
    return p ** (n * n)


def enumerate_ring(p: int, n: int, budget: int = DEFAULT_BUDGET) -> Iterator[Matrix]:
    """All p^(n^2) matrices of M_n(Z_p), lexicographic in row-major entries, zero first."""
    if ring_size(p, n) > budget:
        raise OracleInfeasible(f"M_{n}(Z_{p}) has {ring_size(p, n)} elements, budget {budget}")
    dom = mod_p(p)
    elems = [dom.coerce(v) for v in range(p)]
    for flat in itertools.product(elems, repeat=n * n):
        yield Matrix._make(dom, n, n, tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)))


def ring_array(p: int, n: int, budget: int = DEFAULT_BUDGET) -> np.ndarray:
    """The same enumeration as an (N, n, n) integer array."""
    size = ring_size(p, n)
    if size > budget:
        raise OracleInfeasible(f"M_{n}(Z_{p}) has {size} elements, budget {budget}")
    flat = np.array(list(itertools.product(range(p), repeat=n * n)), dtype=np.int64)
    return flat.reshape(size, n, n)


def to_array(m: Matrix) -> np.ndarray:
    return np.array([[int(s.value) for s in row] for row in m.data], dtype=np.int64)


def from_array(arr: np.ndarray, domain: ScalarDomain) -> Matrix:
    return Matrix(domain, [[int(v) for v in row] for row in arr])


def _eq(lhs: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Per-candidate equality of stacked matrices; rhs may be a single matrix."""
    return np.all(lhs == rhs, axis=(-2, -1))


def _codes(stack: np.ndarray, p: int) -> np.ndarray:
    n2 = stack.shape[-1] * stack.shape[-2]
    weights = p ** np.arange(n2 - 1, -1, -1, dtype=np.int64)
    return stack.reshape(-1, n2) @ weights


def brute_force_inverse(
    kind: GenInvKind | str,
    a: Matrix,
    aux: Matrix | None = None,
    budget: int = DEFAULT_BUDGET,
) -> list[Matrix]:
    """Every x in M_n(Z_p) satisfying the defining equations of ``kind``.

    For INVERSE_ALONG, ``a`` is the element inverted and ``aux`` the element d.
    The result is in enumeration order.
    """
    kind = GenInvKind(kind)
    _check_domain(a.domain)
    if kind.needs_aux and aux is None:
        raise ValueError(f"{kind.value} needs an auxiliary matrix")
    p, n = a.domain.p, a.rows
    X = ring_array(p, n, budget)
    A = to_array(a)

    def mm(l, r):
        return np.matmul(l, r) % p

    def t(m):
        return np.swapaxes(m, -1, -2)

    if kind is GenInvKind.WCORE:
        W = to_array(aux)
        awx = mm(mm(A, W), X)
        ok = _eq(mm(awx, X), X) & _eq(mm(mm(mm(X, A), W), A), A) & _eq(t(awx), awx)
    elif kind is GenInvKind.INVERSE_ALONG:
        D = to_array(aux)
        ok = _eq(mm(mm(X, A), D), D) & _eq(mm(mm(D, A), X), D)
        # membership in dR and Rd: compare against the full sets {dz} and {zd}
        left = set(_codes(mm(D, X), p).tolist())
        right = set(_codes(mm(X, D), p).tolist())
        codes = _codes(X, p)
        ok &= np.array([c in left and c in right for c in codes.tolist()], dtype=bool)
    else:
        AX = mm(A, X)
        XA = mm(X, A)
        ok = _eq(mm(AX, A), A)
        if kind in (GenInvKind.REFLEXIVE, GenInvKind.GROUP, GenInvKind.MOORE_PENROSE, GenInvKind.CORE):
            ok &= _eq(mm(XA, X), X)
        if kind is GenInvKind.GROUP:
            ok &= _eq(AX, XA)
        if kind in (GenInvKind.ONE_THREE, GenInvKind.MOORE_PENROSE, GenInvKind.CORE):
            ok &= _eq(t(AX), AX)
        if kind in (GenInvKind.ONE_FOUR, GenInvKind.MOORE_PENROSE):
            ok &= _eq(t(XA), XA)
        if kind is GenInvKind.CORE:
            ok &= _eq(mm(AX, X), X) & _eq(mm(XA, A), A)
    return [from_array(X[i], a.domain) for i in np.flatnonzero(ok)]
