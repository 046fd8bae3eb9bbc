import pytest
from hypothesis import given, settings, strategies as st

from wcore.geninv import (
    GenInvKind,
    NotCoreInvertible,
    NotGroupInvertible,
    NotInvertibleAlong,
    NotOneThreeInvertible,
    NotWCoreInvertible,
    compute,
    core_inverse,
    equations,
    exists,
    general_inner_inverse,
    group_inverse,
    inner_inverse,
    inverse_along,
    is_ep,
    moore_penrose,
    one_four_inverse,
    one_three_inverse,
    reflexive_inverse,
    try_inverse,
    w_core_inverse,
    w_core_via_product,
)
from wcore.matrix import Matrix, identity, star, zeros
from wcore.worked_examples import example1, example2
from wcore.scalar import GAUSSIAN_RATIONALS, RATIONAL_FIELD, mod_p

QI = GAUSSIAN_RATIONALS


def M(rows, dom=QI):
    return Matrix(dom, rows)


def test_moore_penrose_example():
    a = M([[1, 1], [0, 0]], RATIONAL_FIELD)
    assert moore_penrose(a) == M([["1/2", 0], ["1/2", 0]], RATIONAL_FIELD)


def test_one_three_missing_over_z2():
    a = M([[1, 1], [1, 1]], mod_p(2))
    with pytest.raises(NotOneThreeInvertible):
        one_three_inverse(a)
    assert not exists(GenInvKind.MOORE_PENROSE, a)
    assert try_inverse(GenInvKind.ONE_FOUR, a) is None


def test_nilpotent_has_no_group_or_core_inverse():
    n = M([[0, 1], [0, 0]])
    with pytest.raises(NotGroupInvertible):
        group_inverse(n)
    with pytest.raises(NotCoreInvertible):
        core_inverse(n)
    assert moore_penrose(n) == M([[0, 0], [1, 0]])


def test_example1_values():
    ex = example1()
    a, w = ex["a"], ex["w"]
    assert inverse_along(w, a) == M([["1/2", "1/2"], [0, 0]])
    assert w_core_inverse(a, w) == M([["1/2", 0], [0, 0]])
    assert w_core_via_product(a, w) == M([["1/2", 0], [0, 0]])
    assert core_inverse(a) == M([[1, 0], [0, 0]])


def test_example2_group_inverse_of_wa():
    ex = example2()
    assert group_inverse(ex["w"] @ ex["a"]) == M([[1, 1], [0, 0]])


def test_w_core_reasons():
    a = M([[1, 1], [0, 0]])
    with pytest.raises(NotWCoreInvertible) as info:
        w_core_inverse(a, zeros(QI, 2))
    assert "WNotInvertibleAlongA" in info.value.reasons
    # idempotent, but its column is isotropic: a*a = 0 over Z_5
    iso = M([[1, 0], [2, 0]], mod_p(5))
    with pytest.raises(NotWCoreInvertible) as info:
        w_core_inverse(iso, identity(mod_p(5), 2))
    assert info.value.reasons == ("NotOneThree",)


def test_zero_conventions():
    z = zeros(QI, 2)
    assert w_core_inverse(z, z) == z
    assert group_inverse(z) == z
    assert inverse_along(identity(QI, 2), z) == z


def test_w_identity_gives_core_inverse():
    a = M([[1, "0+1i"], [0, 0]])
    assert w_core_inverse(a, identity(QI, 2)) == core_inverse(a)


def test_along_requires_membership():
    with pytest.raises(NotInvertibleAlong):
        inverse_along(M([[0, 0], [0, 1]]), M([[1, 0], [0, 0]]))


@pytest.mark.parametrize("kind", list(GenInvKind))
def test_certificates_hold(kind):
    a = M([[1, 1], [0, 0]])
    aux = example1()["w"] if kind is GenInvKind.WCORE else (a if kind.needs_aux else None)
    res = compute(kind, a, aux)
    assert res.verified and res.certificate
    assert all(ok for _, ok in equations(kind, a, res.value, aux))


def test_reflexive_and_general_inner():
    a = M([[1, 2], [2, 4]])
    g = inner_inverse(a)
    r = reflexive_inverse(a)
    assert r @ a @ r == r and a @ r @ a == a
    u, v = M([[1, "0+1i"], [3, 0]]), M([[0, 2], [-1, 5]])
    h = general_inner_inverse(a, g, u, v)
    assert a @ h @ a == a


def test_is_ep():
    assert is_ep(M([[1, 0], [0, 0]]))
    assert not is_ep(M([[1, 1], [0, 0]]))


POOL = ["0", "1", "-1", "2", "1/2", "0+1i"]


def matrices(k):
    return st.lists(st.lists(st.sampled_from(POOL), min_size=k, max_size=k), min_size=k, max_size=k).map(
        lambda rows: Matrix(QI, rows)
    )


def squares():
    return st.integers(2, 3).flatmap(lambda k: st.tuples(matrices(k), matrices(k)))


@settings(max_examples=80)
@given(squares())
def test_w_core_routes_agree(aw):
    a, w = aw
    x = try_inverse(GenInvKind.WCORE, a, w)
    try:
        y = w_core_via_product(a, w)
    except NotWCoreInvertible:
        y = None
    assert x == y
    if x is not None:
        assert a @ w @ x @ x == x and x @ a @ w @ a == a
        assert star(a @ w @ x) == a @ w @ x


@settings(max_examples=80)
@given(squares())
def test_mp_independent_of_pivots(aw):
    a, _ = aw
    x = moore_penrose(a, "first")
    assert x == moore_penrose(a, "last")
    assert x == one_four_inverse(a, "last") @ a @ one_three_inverse(a, "first")


@settings(max_examples=80)
@given(squares())
def test_group_is_inverse_along_self(aw):
    a, _ = aw
    assert try_inverse(GenInvKind.GROUP, a) == try_inverse(GenInvKind.INVERSE_ALONG, a, a)


@settings(max_examples=80)
@given(squares())
def test_every_inner_inverse_from_general_form(aw):
    a, u = aw
    g = inner_inverse(a, "last")
    h = general_inner_inverse(a, g, u, star(u))
    assert a @ h @ a == a
