import pytest

from wcore.errors import ConfigError, DomainError, OracleInfeasible, UnknownProperty
from wcore.geninv import GenInvKind, try_inverse
from wcore.harness import (
    CATALOG,
    GENERATORS,
    Instance,
    PropertyId,
    TrialConfig,
    Verdict,
    brute_force_inverse,
    check_property,
    enumerate_ring,
    random_matrix,
    run_property,
    run_suite,
    trial_rng,
)
from wcore.matrix import Matrix, identity, zeros
from wcore.worked_examples import example1
from wcore.scalar import GAUSSIAN_RATIONALS, mod_p

QI = GAUSSIAN_RATIONALS
Z2 = mod_p(2)


def test_catalog_is_complete():
    assert len(CATALOG) == len(PropertyId) == 32
    for pid, spec in CATALOG.items():
        assert spec.id is pid and spec.description and callable(spec.checker)
        assert spec.signature == "fixed" or spec.generator in GENERATORS


def test_parse_ids():
    assert PropertyId.parse(" thm_wcore_12way ") is PropertyId.THM_WCORE_12WAY
    with pytest.raises(UnknownProperty):
        PropertyId.parse("NOPE")


def test_config_validation():
    with pytest.raises(ConfigError):
        TrialConfig(QI, exhaustive=True)
    with pytest.raises(ConfigError):
        TrialConfig(QI, dim=0)
    with pytest.raises(ConfigError):
        TrialConfig(QI, trials=-1)


def test_golden_first_draw():
    cfg = TrialConfig(QI)
    m = random_matrix(cfg, trial_rng(0, "golden", 0))
    assert m.to_strings() == [["0+1i", "-2"], ["-2", "-1"]]


def test_zero_pool_gives_zero():
    cfg = TrialConfig(QI, entry_pool=("0",))
    assert random_matrix(cfg, trial_rng(3, "x", 1)) == zeros(QI, 2)


@pytest.mark.parametrize("name", sorted(GENERATORS))
def test_generators_produce_square_instances(name):
    cfg = TrialConfig(QI, dim=3)
    inst = GENERATORS[name](cfg, trial_rng(0, name, 0))
    assert isinstance(inst, Instance) and inst.a.shape == (3, 3)


def test_enumerate_ring_counts():
    z2 = list(enumerate_ring(2, 2))
    assert len(z2) == 16 and z2[0] == zeros(Z2, 2)
    assert len(set(z2)) == 16
    assert sum(1 for _ in enumerate_ring(3, 2)) == 81
    with pytest.raises(OracleInfeasible):
        list(enumerate_ring(7, 3, budget=1000))


def test_brute_force_examples():
    e = Matrix(Z2, [[1, 1], [0, 0]])
    assert brute_force_inverse(GenInvKind.GROUP, e) == [e]
    z = zeros(Z2, 2)
    assert brute_force_inverse(GenInvKind.WCORE, z, identity(Z2, 2)) == [z]
    assert brute_force_inverse(GenInvKind.INNER, identity(Z2, 2)) == [identity(Z2, 2)]
    with pytest.raises(OracleInfeasible):
        brute_force_inverse(GenInvKind.INNER, identity(Z2, 2), budget=10)
    with pytest.raises(DomainError):
        brute_force_inverse(GenInvKind.INNER, identity(QI, 2))


@pytest.mark.parametrize("kind", list(GenInvKind))
def test_oracle_agrees_over_z2(kind):
    ring = list(enumerate_ring(2, 2))
    for a in ring:
        for aux in (ring if kind.needs_aux else [None]):
            sols = brute_force_inverse(kind, a, aux)
            x = try_inverse(kind, a, aux)
            assert (x is None) == (not sols)
            if x is not None:
                assert x in sols
            if kind.unique:
                assert len(sols) <= 1


def test_check_property_examples():
    ex = example1()
    inst = Instance(ex["a"], ex["b"], ex["w"])
    out = check_property(PropertyId.THM_WCORE_12WAY, inst)
    assert out.verdict is Verdict.HOLDS and out.positive
    ex2 = CATALOG[PropertyId.EX2_CONVERSE_FAILS].fixed()
    assert check_property("EX2_CONVERSE_FAILS", ex2).verdict is Verdict.HOLDS
    a = Matrix(QI, [[1, 1], [0, 0]])
    b = Matrix(QI, [[1, 0], [1, 1]])
    out = check_property(PropertyId.THM_DIFFERENCE_3WAY, Instance(a, b, identity(QI, 2)))
    assert out.verdict is Verdict.INAPPLICABLE


def test_reports_are_deterministic():
    cfg = TrialConfig(QI, trials=15, seed=7)
    ids = [PropertyId.THM_WCORE_12WAY, PropertyId.THM_PARTIAL_ORDER_AXIOMS]
    assert run_suite(cfg, ids).dumps() == run_suite(cfg, ids).dumps()
    assert run_suite(cfg, ids[::-1]).dumps() == run_suite(cfg, ids).dumps()


def test_empty_selection():
    report = run_suite(TrialConfig(QI, trials=3), [])
    assert report.results == {} and report.ok


def test_min_applicable_marks_vacuous():
    cfg = TrialConfig(QI, trials=2, min_applicable=10**6)
    res = run_property(cfg, PropertyId.LEM_AW_PRODUCT)
    assert res.verdict == "vacuous"
    fixed = run_property(cfg, PropertyId.EX2_CONVERSE_FAILS)
    assert fixed.verdict == "pass" and fixed.trials == 1


def test_small_exhaustive_run():
    cfg = TrialConfig(Z2, exhaustive=True)
    report = run_suite(cfg, [PropertyId.LEM_WCORE_PAR_I, PropertyId.THM_EP_5WAY])
    assert report.ok
    assert report.results[PropertyId.LEM_WCORE_PAR_I].trials == 16**3
