"""Dense exact matrices over a :class:`ScalarDomain`.

Square matrices form the *-ring M_n(domain); ``star`` is the conjugate
transpose (plain transpose when the scalar involution is the identity).
Every rank, range and annihilator question is answered by Gauss-Jordan
elimination in :func:`rref`.
"""

from __future__ import annotations

import operator
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .errors import NotInvertible, ShapeError
from .scalar import Scalar, ScalarDomain, render_scalar

__all__ = [
    "Matrix",
    "RankFactorization",
    "RREF",
    "identity",
    "zeros",
    "star",
    "rref",
    "rank",
    "solve_right",
    "solve_left",
    "col_space_le",
    "row_space_le",
    "right_annihilator_contained",
    "left_annihilator_contained",
    "rank_factorization",
    "inverse",
    "is_unit",
]


class Matrix:
    """Immutable dense matrix; hashable so that it can key caches."""

    __slots__ = ("domain", "rows", "cols", "data", "_hash")

    def __init__(self, domain: ScalarDomain, entries: Iterable[Iterable]):
        data = tuple(tuple(domain.coerce(x) for x in row) for row in entries)
        if not data:
            raise ShapeError("a matrix needs at least one row")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ShapeError("ragged matrix rows")
        self._init(domain, len(data), width, data)

    def _init(self, domain, rows, cols, data):
        self.domain = domain
        self.rows = rows
        self.cols = cols
        self.data = data
        self._hash = None

    @classmethod
    def _make(cls, domain, rows, cols, data) -> "Matrix":
        obj = cls.__new__(cls)
        obj._init(domain, rows, cols, data)
        return obj

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __iter__(self):
        return iter(self.data)

    def tolist(self) -> list[list[Scalar]]:
        return [list(row) for row in self.data]

    def to_strings(self) -> list[list[str]]:
        return [[render_scalar(x, self.domain) for x in row] for row in self.data]

    def __repr__(self):
        return f"Matrix({self.to_strings()}, domain={self.domain.name})"

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(row) + "]" for row in self.to_strings()) + "]"

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.domain == other.domain and self.data == other.data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.domain, self.data))
        return self._hash

    def _check_same(self, other: "Matrix"):
        if self.domain != other.domain:
            raise ShapeError(f"domain mismatch: {self.domain.name} vs {other.domain.name}")
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        data = tuple(tuple(map(operator.add, r, s)) for r, s in zip(self.data, other.data))
        return Matrix._make(self.domain, self.rows, self.cols, data)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        data = tuple(tuple(map(operator.sub, r, s)) for r, s in zip(self.data, other.data))
        return Matrix._make(self.domain, self.rows, self.cols, data)

    def __neg__(self) -> "Matrix":
        data = tuple(tuple(-x for x in row) for row in self.data)
        return Matrix._make(self.domain, self.rows, self.cols, data)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.domain != other.domain:
            raise ShapeError(f"domain mismatch: {self.domain.name} vs {other.domain.name}")
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        if self.cols == 0:
            return zeros(self.domain, self.rows, other.cols)
        zero = self.domain.zero
        tcols = tuple(zip(*other.data))
        data = tuple(
            tuple(sum(map(operator.mul, row, col), zero) for col in tcols) for row in self.data
        )
        return Matrix._make(self.domain, self.rows, other.cols, data)

    def scale(self, s) -> "Matrix":
        s = self.domain.coerce(s)
        data = tuple(tuple(s * x for x in row) for row in self.data)
        return Matrix._make(self.domain, self.rows, self.cols, data)

    def __mul__(self, s) -> "Matrix":
        if isinstance(s, Matrix):
            return self @ s
        return self.scale(s)

    def __rmul__(self, s) -> "Matrix":
        return self.scale(s)

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square or k < 0:
            raise ShapeError("only non-negative powers of square matrices")
        out = identity(self.domain, self.rows)
        for _ in range(k):
            out = out @ self
        return out

    def transpose(self) -> "Matrix":
        if self.rows == 0 or self.cols == 0:
            return Matrix._make(self.domain, self.cols, self.rows, ((),) * self.cols)
        return Matrix._make(self.domain, self.cols, self.rows, tuple(zip(*self.data)))

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def star(self) -> "Matrix":
        return star(self)

    def is_zero(self) -> bool:
        return not any(x for row in self.data for x in row)

    def is_idempotent(self) -> bool:
        return self @ self == self

    def is_projection(self) -> bool:
        return self.is_idempotent() and star(self) == self

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        data = tuple(tuple(self.data[i][j] for j in cols) for i in rows)
        return Matrix._make(self.domain, len(rows), len(cols), data)


def identity(domain: ScalarDomain, n: int) -> Matrix:
    zero, one = domain.zero, domain.one
    data = tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))
    return Matrix._make(domain, n, n, data)


def zeros(domain: ScalarDomain, rows: int, cols: int | None = None) -> Matrix:
    cols = rows if cols is None else cols
    zero = domain.zero
    return Matrix._make(domain, rows, cols, tuple((zero,) * cols for _ in range(rows)))


def star(a: Matrix) -> Matrix:
    """Involution of the matrix ring: entrywise involution of the transpose."""
    t = a.transpose()
    if a.domain.involution == "identity":
        return t
    conj = a.domain.conj
    data = tuple(tuple(conj(x) for x in row) for row in t.data)
    return Matrix._make(a.domain, t.rows, t.cols, data)


class RREF(NamedTuple):
    R: Matrix
    pivots: tuple[int, ...]
    rank: int
    T: Matrix


@lru_cache(maxsize=1 << 16)
def rref(a: Matrix, pivot: str = "first") -> RREF:
    """Reduced row echelon form with the invertible transform: ``T @ a == R``.

    ``pivot`` picks which candidate row supplies each pivot ("first" or "last"
    nonzero entry at or below the current row). R does not depend on it; T does
    whenever ``a`` is rank deficient.
    """
    if pivot not in ("first", "last"):
        raise ValueError(f"unknown pivot strategy {pivot!r}")
    m, n = a.rows, a.cols
    zero, one = a.domain.zero, a.domain.one
    rows = [list(r) for r in a.data]
    t = [[one if i == j else zero for j in range(m)] for i in range(m)]
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        cands = [i for i in range(r, m) if rows[i][c]]
        if not cands:
            continue
        k = cands[0] if pivot == "first" else cands[-1]
        if k != r:
            rows[r], rows[k] = rows[k], rows[r]
            t[r], t[k] = t[k], t[r]
        inv = 1 / rows[r][c]
        if inv != 1:
            rows[r] = [inv * x for x in rows[r]]
            t[r] = [inv * x for x in t[r]]
        prow, trow = rows[r], t[r]
        for i in range(m):
            f = rows[i][c]
            if i != r and f:
                rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
                t[i] = [x - f * y for x, y in zip(t[i], trow)]
        pivots.append(c)
        r += 1
    R = Matrix._make(a.domain, m, n, tuple(map(tuple, rows)))
    T = Matrix._make(a.domain, m, m, tuple(map(tuple, t)))
    return RREF(R, tuple(pivots), len(pivots), T)


def rank(a: Matrix) -> int:
    return rref(a).rank


def _check_rows(b: Matrix, a: Matrix):
    if b.domain != a.domain:
        raise ShapeError(f"domain mismatch: {b.domain.name} vs {a.domain.name}")
    if b.rows != a.rows:
        raise ShapeError(f"row mismatch: {b.shape} vs {a.shape}")


@lru_cache(maxsize=1 << 16)
def solve_right(b: Matrix, a: Matrix) -> Matrix | None:
    """Return X with ``b @ X == a`` (free variables zero), or None if col(a) is not in col(b)."""
    _check_rows(b, a)
    res = rref(b)
    ta = res.T @ a
    if any(x for row in ta.data[res.rank:] for x in row):
        return None
    zero_row = (a.domain.zero,) * a.cols
    out = [zero_row] * b.cols
    for k, c in enumerate(res.pivots):
        out[c] = ta.data[k]
    return Matrix._make(a.domain, b.cols, a.cols, tuple(out))


def solve_left(b: Matrix, a: Matrix) -> Matrix | None:
    """Return Y with ``Y @ b == a``, or None if row(a) is not in row(b)."""
    if b.cols != a.cols:
        raise ShapeError(f"column mismatch: {b.shape} vs {a.shape}")
    y = solve_right(b.transpose(), a.transpose())
    return None if y is None else y.transpose()


def col_space_le(a: Matrix, b: Matrix) -> bool:
    """aR is contained in bR."""
    return solve_right(b, a) is not None


def row_space_le(a: Matrix, b: Matrix) -> bool:
    """Ra is contained in Rb."""
    return solve_left(b, a) is not None


def right_annihilator_contained(a: Matrix, f: Matrix) -> bool:
    """{x : ax = 0} is contained in {x : fx = 0}, i.e. f lies in Ra."""
    return solve_left(a, f) is not None


def left_annihilator_contained(a: Matrix, p: Matrix) -> bool:
    """{x : xa = 0} is contained in {x : xp = 0}, i.e. p lies in aR."""
    return solve_right(a, p) is not None


class RankFactorization(NamedTuple):
    F: Matrix
    G: Matrix
    rank: int


def rank_factorization(a: Matrix) -> RankFactorization:
    """``a == F @ G`` with F the pivot columns of a and G the nonzero rows of its RREF.

    For the zero matrix F is n x 0 and G is 0 x n.
    """
    res = rref(a)
    r = res.rank
    F = a.submatrix(range(a.rows), res.pivots)
    G = res.R.submatrix(range(r), range(a.cols))
    return RankFactorization(F, G, r)


def inverse(a: Matrix) -> Matrix:
    if not a.is_square:
        raise ShapeError(f"cannot invert a {a.shape} matrix")
    res = rref(a)
    if res.rank < a.rows:
        raise NotInvertible(f"singular matrix (rank {res.rank} < {a.rows})")
    return res.T


def is_unit(a: Matrix) -> bool:
    return a.is_square and rank(a) == a.rows
