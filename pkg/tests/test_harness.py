import pytest

from isolab.errors import LabError
from isolab.harness import suites
from isolab.harness.generate import KINDS, SMALL, Scale, gen_instance
from isolab.harness.shrink import candidates, instance_size, shrink_instance
from isolab.harness.suites import SUITES, Failure, Suite, evaluate, expect, run_suite, trial_rng
from isolab.maps import verify_into_isometry


# generation


@pytest.mark.parametrize("kind", KINDS)
def test_generation_is_deterministic(kind):
    a = gen_instance(11, SMALL, kind)
    b = gen_instance(11, SMALL, kind)
    assert a.to_document() == b.to_document()
    a.check()


def test_full_space_pair_example():
    inst = gen_instance(1, Scale(), "full_space_pair")
    T = inst.maps[0]
    assert 1 <= T.domain.ambient.n <= 8 and 1 <= T.codomain.ambient.n <= 8
    assert T.domain.dim == T.domain.ambient.n and T.codomain.dim == T.codomain.ambient.n
    assert verify_into_isometry(T)


def test_random_subspace_example():
    A = gen_instance(2, Scale(), "random_subspace").subspaces[0]
    assert len(A.basis) == A.dim <= 4


@pytest.mark.parametrize("seed", range(20))
def test_isometry_pairs_are_isometries(seed):
    for kind in ("isometry_pair", "onto_pair", "composable_pair"):
        for T in gen_instance(seed, SMALL, kind).maps:
            assert verify_into_isometry(T)


@pytest.mark.parametrize("bad", [(9, 3, 3), (5, 5, 3), (5, 3, 9), (0, 1, 1)])
def test_scale_bounds(bad):
    with pytest.raises(LabError):
        Scale(*bad)


def test_unknown_kind():
    with pytest.raises(LabError):
        gen_instance(0, SMALL, "banana")


# suites


def test_unknown_suite():
    with pytest.raises(LabError):
        run_suite("T9.9", 1)


def test_every_spec_suite_is_registered():
    want = "T3.1 L4.1 L4.2 T4.1 C4.1 P4.1 C4.2 P5.1 P5.2 P6.1 P6.2 P6.3 C6.1 L7.1 L7.2 P7.1 P7.2 T7.1 T7.2 C7.2-vacuity C7.3 C7.4 C7.5"
    assert set(want.split()) <= set(SUITES)


def test_run_suite_examples():
    r = run_suite("T3.1", 200, seed=7)
    assert r.status == "pass" and not r.failures and r.passed == 200
    r = run_suite("C7.4", 100, seed=3)
    assert r.status == "pass"
    r = run_suite("C7.2-vacuity", 100, seed=5)
    assert r.status == "pass"
    assert r.note == "hypothesis never satisfiable on finite models"


def test_suite_determinism():
    assert run_suite("P6.2", 15, seed=4) == run_suite("P6.2", 15, seed=4)
    assert trial_rng("X", 1, 2).random() == trial_rng("X", 1, 2).random()


@pytest.mark.parametrize("suite_id", sorted(SUITES))
def test_every_suite_passes_a_short_run(suite_id):
    r = run_suite(suite_id, 6, seed=2)
    assert r.status == "pass", [c.message for c in r.failures]
    assert r.failures == [] and r.passed + r.skipped == 6


# shrinking


@pytest.fixture
def planted(monkeypatch):
    """Register suites that fail on purpose so the shrinker has work to do."""

    def big_codomain(inst, rng):
        expect(inst.maps[-1].codomain.ambient.n < 2, "codomain has two points")

    def big_subspace(inst, rng):
        expect(inst.subspaces[0].dim < 2, "dimension two")

    monkeypatch.setitem(SUITES, "PLANT-MAP", Suite("PLANT-MAP", "isometry_pair", Scale(6, 3, 4), big_codomain, ""))
    monkeypatch.setitem(SUITES, "PLANT-SUB", Suite("PLANT-SUB", "random_subspace", Scale(6, 3, 4), big_subspace, ""))


def test_shrinker_keeps_failures_and_shrinks(planted):
    for sid in ("PLANT-MAP", "PLANT-SUB"):
        r = run_suite(sid, 12, seed=1)
        s = SUITES[sid]
        assert r.failures
        for cx in r.failures:
            assert evaluate(s, cx.instance, trial_rng(sid, 1, cx.trial))[0] == "fail"
            assert cx.shrunk_size <= cx.original_size
            cx.instance.check()
        sizes = {cx.shrunk_size for cx in r.failures}
        assert any(cx.shrunk_size < cx.original_size for cx in r.failures), sizes


def test_shrinker_reaches_a_local_minimum(planted):
    s = SUITES["PLANT-MAP"]
    inst = gen_instance(3, s.scale, "isometry_pair")
    fails = lambda i: evaluate(s, i, trial_rng("PLANT-MAP", 0, 0))[0] == "fail"  # noqa: E731
    small = shrink_instance(inst, fails)
    assert small.maps[-1].codomain.ambient.n == 2
    assert not any(fails(c) for c in candidates(small))
    assert instance_size(small) <= instance_size(inst)


def test_shrinking_can_be_turned_off(planted):
    r = run_suite("PLANT-SUB", 5, seed=0, shrink=False)
    assert all(c.original_size == c.shrunk_size for c in r.failures)


def test_expect_raises_failure():
    with pytest.raises(Failure):
        expect(False, "no")
    expect(True, "yes")


def test_oracle_suite_is_exact():
    r = suites.run_suite("ORACLE", 40, seed=9)
    assert r.status == "pass" and r.skipped == 0
