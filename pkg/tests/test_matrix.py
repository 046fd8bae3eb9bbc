import pytest
from hypothesis import given, settings, strategies as st

from wcore.errors import NotInvertible, ShapeError
from wcore.matrix import (
    Matrix,
    identity,
    inverse,
    is_unit,
    left_annihilator_contained,
    rank,
    rank_factorization,
    right_annihilator_contained,
    rref,
    solve_left,
    solve_right,
    star,
    zeros,
)
from wcore.scalar import GAUSSIAN_RATIONALS, RATIONAL_FIELD, mod_p

Q, QI = RATIONAL_FIELD, GAUSSIAN_RATIONALS


def M(rows, dom=QI):
    return Matrix(dom, rows)


def test_star_examples():
    assert star(M([[1, 1], [0, 0]], Q)) == M([[1, 0], [1, 0]], Q)
    assert star(M([["0+1i", 0], [0, 0]])) == M([["0-1i", 0], [0, 0]])
    assert star(identity(QI, 3)) == identity(QI, 3)


def test_rref_examples():
    r = rref(M([[1, 1], [0, 0]], Q))
    assert r.R == M([[1, 1], [0, 0]], Q) and r.rank == 1 and r.pivots == (0,)
    r = rref(M([[2, 0], [0, 0]], Q))
    assert r.R == M([[1, 0], [0, 0]], Q) and r.rank == 1
    assert rref(zeros(Q, 3)).rank == 0


def test_rref_transform():
    a = M([[0, 2, 4], [1, 1, 1], [1, 3, 5]], Q)
    r = rref(a)
    assert r.T @ a == r.R and is_unit(r.T) and r.rank == 2
    last = rref(a, pivot="last")
    assert last.T @ a == last.R and last.R == r.R


def test_solve_examples():
    a, b = M([[1, 1], [0, 0]]), M([[1, 1], [2, 0]])
    x = solve_right(b, a)
    assert x is not None and b @ x == a
    anything = M([[3, "1/2"], ["0+1i", 7]])
    assert solve_right(identity(QI, 2), anything) == anything
    assert solve_right(M([[1, 1], [0, 0]]), identity(QI, 2)) is None

    assert solve_left(a, a) @ a == a
    assert solve_left(M([[1, 1], [0, 0]]), identity(QI, 2)) is None
    y = solve_left(M([[2, 2], [0, 0]], Q), M([[1, 1], [0, 0]], Q))
    assert y == M([["1/2", 0], [0, 0]], Q)


def test_annihilator_examples():
    unit = M([[1, 2], [3, 4]])
    f = M([[5, 0], [1, 1]])
    z = zeros(QI, 2)
    assert right_annihilator_contained(unit, f)
    assert not right_annihilator_contained(z, f)
    assert right_annihilator_contained(f, f)
    assert left_annihilator_contained(unit, f)
    assert not left_annihilator_contained(z, f)
    assert left_annihilator_contained(f, f)


def test_rank_factorization_examples():
    rf = rank_factorization(M([[1, 1], [0, 0]]))
    assert rf.F == M([[1], [0]]) and rf.G == M([[1, 1]]) and rf.rank == 1
    rf = rank_factorization(identity(QI, 2))
    assert rf.F == identity(QI, 2) and rf.G == identity(QI, 2)
    rf = rank_factorization(zeros(QI, 2))
    assert rf.rank == 0 and rf.F.shape == (2, 0) and rf.G.shape == (0, 2)
    assert rf.F @ rf.G == zeros(QI, 2)


def test_units():
    assert is_unit(identity(QI, 2))
    assert not is_unit(M([[1, 0], [1, 0]]))
    assert not is_unit(M([[1, 0], [0, 0]]))
    with pytest.raises(NotInvertible):
        inverse(M([[1, 0], [1, 0]]))
    a = M([[1, "0+1i"], [2, 3]])
    assert inverse(a) @ a == identity(QI, 2)


def test_shape_errors():
    with pytest.raises(ShapeError):
        M([[1, 2]]) @ M([[1, 2]])
    with pytest.raises(ShapeError):
        M([[1]]) + Matrix(Q, [[1]])


def test_hashable_and_immutable():
    a = M([[1, 2], [3, 4]])
    assert hash(a) == hash(M([[1, 2], [3, 4]]))
    assert {a: 1}[M([[1, 2], [3, 4]])] == 1


POOL = ["0", "1", "-1", "2", "1/2", "0+1i", "-2+1i"]


def matrices(n=None, dom=QI, pool=POOL):
    sizes = st.integers(2, 3) if n is None else st.just(n)
    return sizes.flatmap(
        lambda k: st.lists(st.lists(st.sampled_from(pool), min_size=k, max_size=k), min_size=k, max_size=k)
    ).map(lambda rows: Matrix(dom, rows))


pairs = st.integers(2, 3).flatmap(lambda k: st.tuples(matrices(k), matrices(k)))


@given(pairs)
def test_star_is_involution(ab):
    a, b = ab
    assert star(star(a)) == a
    assert star(a @ b) == star(b) @ star(a)
    assert star(a + b) == star(a) + star(b)


@given(matrices())
def test_rank_factorization_property(a):
    rf = rank_factorization(a)
    assert rf.F @ rf.G == a
    assert rank(rf.F) == rank(rf.G) == rank(a) == rf.rank


@given(pairs)
def test_solve_right_soundness(ab):
    b, a = ab
    x = solve_right(b, a)
    if x is None:
        # a does not lie in the column space of b: the augmented rank grows
        aug = Matrix(QI, [list(rb) + list(ra) for rb, ra in zip(b.data, a.data)])
        assert rank(aug) > rank(b)
    else:
        assert b @ x == a


@given(matrices())
def test_positivity_of_the_involution(a):
    assert rank(star(a) @ a) == rank(a)


@settings(max_examples=50)
@given(matrices(2, mod_p(3), ["0", "1", "2"]))
def test_mod_p_transpose_star(a):
    assert star(a) == a.transpose()
