import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from isolab import oracles
from isolab.choquet import boundary_meets_suppmax, ch_contains, choquet_report, m_set, prop63_set
from isolab.errors import LabError, NotIsometryError
from isolab.harness.generate import SMALL, gen_instance
from isolab.maps import LinearMap
from isolab.space import Subspace, WeightedSpace, is_boundary

HALF = Fraction(1, 2)

subspaces = st.integers(0, 10**6).map(lambda s: gen_instance(s, SMALL, "random_subspace").subspaces[0])
isometries = st.integers(0, 10**6).map(lambda s: gen_instance(s, SMALL, "isometry_pair").maps[0])


def test_m_set_examples(A_sign, A_half, T_avg):
    assert m_set(A_sign) == ("a", "b")
    assert m_set(A_half) == ("a", "c")
    assert m_set(T_avg) == ("x", "y")


def test_m_set_refuses_non_isometries(ab):
    A = ab.full()
    T = LinearMap.from_values(A, A, [[HALF, 0], [0, 1]])
    with pytest.raises(NotIsometryError):
        m_set(T)


def test_ch_contains_examples(A_sign):
    assert ch_contains(A_sign, {"a", "b"})
    assert not ch_contains(A_sign, {"a"})
    assert not ch_contains(A_sign, {"a", "b", "c"})
    with pytest.raises(LabError):
        ch_contains(A_sign, set())


def test_prop63_examples(A_half, ab):
    assert prop63_set(A_half) == ("a", "c")
    assert prop63_set(ab.full()) == ("a", "b")
    assert prop63_set(ab.sub((1, 1))) == ("a", "b")


def test_prop63_preconditions(A_sign):
    with pytest.raises(LabError):
        prop63_set(A_sign.ambient.sub((1, 0, 0), (0, 1, 0)))
    w = WeightedSpace(("a", "b"), (2, 1))
    with pytest.raises(LabError):
        prop63_set(w.full())


def test_boundary_meets_suppmax_examples(A_sign, ab, abc):
    assert boundary_meets_suppmax(A_sign, abc.func((2, 0, 1)), {"a", "b"})
    assert boundary_meets_suppmax(ab.full(), ab.func((0, 3)), {"a", "b"})
    assert boundary_meets_suppmax(A_sign, abc.func((1, 1, 1)), {"a", "b"})
    with pytest.raises(LabError):
        boundary_meets_suppmax(A_sign, abc.func((1, 1, 1)), {"a"})


def test_report_json(T_avg):
    rep = choquet_report(T_avg, [("x", "y"), ("x",)])
    out = rep.to_json()
    assert out["m_set"] == ["x", "y"]
    assert out["extreme_generators"]["y"] == [[0, 1], [-1, 1]]
    assert [m["member"] for m in out["ch_members"]] == [True, False]
    json.dumps(out)


@given(subspaces)
def test_m_set_is_a_boundary_and_a_member(A):
    U = m_set(A)
    assert U
    assert set(U) == set(oracles.m_set_identity(A))
    assert is_boundary(A, U)
    assert ch_contains(A, U)


@given(isometries)
def test_m_set_of_map_equals_m_set_of_image(T):
    image = Subspace(T.codomain.ambient, tuple(T.apply(b) for b in T.domain.basis))
    assert set(m_set(T)) == set(m_set(image))


@given(isometries)
def test_pullbacks_cover_ext(T):
    pulls = set()
    for x in T.codomain.points:
        h = T.pullback(x).coords
        pulls |= {tuple(h), tuple(-v for v in h)}
    assert oracles.dual_vertices(T.domain) <= pulls
    assert m_set(T)


@given(st.integers(0, 10**6))
def test_prop63_equals_m_set(seed):
    A = gen_instance(seed, SMALL, "random_subspace").subspaces[0]
    Z = WeightedSpace(A.points, (1,) * A.ambient.n)
    basis = [Z.func([1] * Z.n)]
    for b in A.basis:
        try:
            Subspace(Z, tuple(basis + [Z.func(b.values)]))
        except LabError:
            continue
        basis.append(Z.func(b.values))
    B = Subspace(Z, tuple(basis))
    assert set(prop63_set(B)) == set(oracles.m_set_identity(B))
