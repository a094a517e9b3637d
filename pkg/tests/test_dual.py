from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from isolab import oracles
from isolab.dual import (
    GeneratorSystem,
    dual_norm,
    extreme_functionals,
    in_absconv,
    in_conv,
    is_extreme,
    sigma_check,
    sigma_points,
)
from isolab.errors import LabError, NormalizationError, SizeError
from isolab.functional import Functional
from isolab.harness.generate import SMALL, gen_instance
from isolab.scalars import COMPLEX, I
from isolab.space import Family, WeightedSpace, norm

HALF = Fraction(1, 2)

subspaces = st.integers(0, 10**6).map(lambda s: gen_instance(s, SMALL, "random_subspace").subspaces[0])


def F(A, *coords):
    return Functional(A, tuple(Fraction(c) for c in coords))


# dual norm


def test_dual_norm_examples(ab, A_sign):
    A = ab.full()
    assert dual_norm(F(A, 1, -1)) == 2
    assert dual_norm(F(A_sign, 0, 0)) == 0
    w = WeightedSpace(("a", "b"), (2, 1)).full()
    assert dual_norm(F(w, 1, 0)) == HALF
    assert dual_norm(F(w, 2, 0)) == 1


@given(st.data())
def test_dual_norm_matches_vertex_enumeration(data):
    A = data.draw(subspaces)
    c = data.draw(st.lists(st.integers(-3, 3), min_size=A.dim, max_size=A.dim))
    ell = F(A, *c)
    assert dual_norm(ell) == oracles.dual_norm(A, ell.coords)
    assert (dual_norm(ell) == 0) == ell.is_zero()


# absolutely convex hulls


def test_in_absconv_examples(ab):
    A = ab.full()
    v = in_absconv(F(A, 1, 0), [F(A, 1, 1), F(A, 1, -1)])
    assert v and v.witness == [HALF, HALF]
    v = in_absconv(F(A, 1, 1), [F(A, 1, -1), F(A, 1, 0)])
    assert not v
    sep = v.witness
    hull_max = max(abs(g(sep)) for g in (F(A, 1, -1), F(A, 1, 0)))
    assert F(A, 1, 1)(sep) > hull_max
    v = in_absconv(F(A, 0, 0), [F(A, 1, 1), F(A, 2, 0)])
    assert v and v.witness == [0, 0]


def test_in_absconv_separator_by_grid(ab):
    # independent check: (1,1) escapes conv{+-(1,-1), +-(1,0)} along f = (0,1) on a rational grid
    A = ab.full()
    gens = [(1, -1), (1, 0)]
    grid = [Fraction(k, 4) for k in range(-8, 9)]
    found = False
    for u in grid:
        for w in grid:
            hull = max(abs(g[0] * u + g[1] * w) for g in gens)
            if u + w > hull:
                found = True
    assert found


@given(subspaces)
def test_dual_ball_is_absconv_of_generators(A):
    gens = GeneratorSystem.of(A).functionals()
    for g in gens:
        assert dual_norm(g) <= 1
    # sums and differences of generators scaled to norm one stay in the hull
    for g in gens[:3]:
        for h in gens[:3]:
            ell = g + h
            if ell.is_zero():
                continue
            ell = ell * (1 / dual_norm(ell))
            assert in_absconv(ell, gens)


def test_complex_hull_carries_confidence_tag():
    Z = WeightedSpace(("a", "b"), (1, 1), COMPLEX)
    A = Z.full()
    v = in_absconv(Functional(A, (HALF * I, HALF)), [A.generator("a"), A.generator("b")])
    assert v and v.confidence == "discretized(16)"


# extremality


def test_is_extreme_examples(A_sign, ab):
    assert is_extreme(A_sign, F(A_sign, 1, 1))
    assert not is_extreme(A_sign, F(A_sign, 1, 0))
    assert is_extreme(ab.full(), F(ab.full(), 1, 0))


def test_is_extreme_needs_norm_one(A_sign):
    with pytest.raises(NormalizationError):
        is_extreme(A_sign, F(A_sign, 2, 2))
    with pytest.raises(NormalizationError):
        is_extreme(A_sign, F(A_sign, 0, 0))


def test_non_generator_on_sphere_is_not_extreme(ab):
    A = ab.full()
    assert not is_extreme(A, F(A, HALF, HALF))


def test_repeated_generator_is_not_disqualified_by_its_copy():
    Z = WeightedSpace(("a", "b", "c"), (1, 1, 1))
    A = Z.sub((1, 1, 0), (0, 0, 1))
    assert is_extreme(A, A.generator("a"))
    assert is_extreme(A, A.generator("b"))


@given(subspaces)
def test_extremality_matches_vertex_enumeration(A):
    ext = oracles.dual_vertices(A)
    for z in A.points:
        g = A.generator(z)
        if g.is_zero() or dual_norm(g) != 1:
            assert tuple(g.coords) not in ext
            continue
        assert bool(is_extreme(A, g)) == (tuple(g.coords) in ext)
        assert bool(is_extreme(A, -g)) == bool(is_extreme(A, g))


@given(subspaces)
def test_extreme_points_are_signed_generators(A):
    signed = {tuple(g) for g in A.generators} | {tuple(-v for v in g) for g in A.generators}
    assert oracles.dual_vertices(A) <= signed
    assert {tuple(g.coords) for g in extreme_functionals(A)} == oracles.dual_vertices(A)


@given(st.data())
def test_exposed_face_vertices_are_extreme(data):
    # ex D = D cap ext A* for the exposed face D = {l : l(f) = ||f||}
    A = data.draw(subspaces)
    c = data.draw(st.lists(st.integers(-2, 2), min_size=A.dim, max_size=A.dim))
    if not any(c):
        return
    f = A.function(c)
    nf = norm(f, A)
    face = set(oracles.face_vertices(A, [(A.coords(f), nf)]))
    assert face == {tuple(g.coords) for g in extreme_functionals(A) if g.apply_coords(A.coords(f)) == nf}


# Sigma(G)


def test_sigma_examples(ab):
    A = ab.full()
    rep = sigma_check(A, Family(A, ((1, 1),)))
    assert rep.centered
    assert rep.member_test(F(A, HALF, HALF))
    got = {g.coords for g in rep.extreme_members}
    assert got == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    assert not sigma_check(A, Family(A, ((1, 0), (0, 1)))).centered


def test_sigma_size_limit(ab):
    A = ab.full()
    with pytest.raises(SizeError):
        sigma_check(A, Family(A, tuple((1, k) for k in range(21))))


def test_sigma_rejects_complex_and_foreign_families(ab, abc):
    Z = WeightedSpace(("a",), (1,), COMPLEX)
    with pytest.raises(LabError):
        sigma_check(Z.full(), Family(Z.full(), ((1,),)))
    with pytest.raises(LabError):
        sigma_check(ab.full(), Family(abc.full(), ((1, 0, 0),)))


def test_sigma_points_single_point_faces(ab):
    A = ab.full()
    pts = sigma_points(A, Family(A, ((1, HALF),)))
    assert {p.coords for p in pts} == {(1, 0), (-1, 0)}
    assert sigma_points(A, Family(A, ((1, 1),))) is None


@given(st.data())
def test_sigma_extreme_members_match_face_enumeration(data):
    A = data.draw(subspaces)
    k = data.draw(st.integers(1, 3))
    members = []
    for _ in range(k):
        c = data.draw(st.lists(st.integers(-2, 2), min_size=A.dim, max_size=A.dim))
        if any(c):
            members.append(A.function(c))
    if not members:
        return
    G = Family(A, tuple(members))
    rep = sigma_check(A, G)
    brute = oracles.sigma_vertices(A, [A.coords(f) for f in G], [norm(f, A) for f in G])
    assert rep.centered == bool(brute)
    assert {tuple(g.coords) for g in rep.extreme_members} == brute
    for _, ell in rep.faces:
        assert rep.member_test(ell)
        assert in_conv(ell, rep.extreme_members)
