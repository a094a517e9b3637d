"""One property suite per result, each run over generated instances.

A check takes an instance and a seeded RNG. It raises :class:`Skip` when
the instance does not meet the result's hypotheses and :class:`Failure`
when the conclusion is violated; returning normally is a pass.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from isolab import oracles
from isolab.choquet import ch_contains, m_set, prop63_set
from isolab.dual import (
    dual_norm,
    dual_norm_maximizer,
    extreme_functionals,
    in_conv,
    is_extreme,
    is_extreme_functional,
    sigma_check,
    sigma_points,
)
from isolab.errors import LabError, NotIsometryError, TheoremViolation
from isolab.functional import Functional
from isolab.harness.generate import SMALL, Instance, Scale, composition_map, gen_instance
from isolab.isometry import (
    CompositionForm,
    check_identity,
    choquet_set_not_closed,
    compose_forms,
    decompose,
    impostors,
    invert_form,
    pairs_injective,
    property_alpha_beta,
    uniqueness_holds,
    weighted_composition_operator,
)
from isolab.maps import LinearMap, verify_into_isometry, verify_onto_isometry
from isolab.space import Family, Subspace, WeightedSpace, is_boundary, norm, placed_over, sim_equiv, suppmax


class Skip(Exception):
    """The instance does not satisfy the hypotheses of the result."""


class Failure(Exception):
    """The conclusion of the result fails on this instance."""


def expect(cond, message: str) -> None:
    if not cond:
        raise Failure(message)


@dataclass(frozen=True)
class Suite:
    suite_id: str
    kind: str | tuple
    scale: Scale
    check: Callable[[Instance, random.Random], None]
    summary: str
    note: str = ""

    def kind_for(self, trial: int) -> str:
        """Suites with several instance kinds cycle through them by trial."""
        if isinstance(self.kind, tuple):
            return self.kind[trial % len(self.kind)]
        return self.kind


SUITES: dict[str, Suite] = {}


def suite(suite_id: str, kind: str, summary: str, scale: Scale = SMALL, note: str = ""):
    def register(fn):
        SUITES[suite_id] = Suite(suite_id, kind, scale, fn, summary, note)
        return fn

    return register


# helpers


def _signed(coords_list) -> set:
    out = set()
    for c in coords_list:
        c = tuple(c)
        out.add(c)
        out.add(tuple(-v for v in c))
    return out


def _pullback_set(T: LinearMap, points=None) -> set:
    points = T.codomain.points if points is None else points
    return _signed(T.pullback(x).coords for x in points)


def _random_element(rng: random.Random, A: Subspace, small: bool = True):
    while True:
        if small:
            c = [Fraction(rng.randint(-2, 2)) for _ in range(A.dim)]
        else:
            c = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(A.dim)]
        f = A.function(c)
        if not f.is_zero():
            return f


def _exposing(A: Subspace, z):
    """A function whose suppmax contains z (z must carry an extreme functional)."""
    v = is_extreme(A, A.generator(z))
    if v.witness is not None:
        return v.witness
    return dual_norm_maximizer(A.generator(z))


def _random_family(rng: random.Random, A: Subspace, size: int, anchor=None) -> Family:
    """Members normed at a common point ``anchor`` when one is given (hence centered).

    An anchored family always starts with a function exposing the anchor.
    """
    members = [] if anchor is None else [_exposing(A, anchor)]
    for _ in range(40 * size):
        if len(members) >= size:
            break
        f = _random_element(rng, A)
        if anchor is None or anchor in suppmax(f, A):
            if f not in members:
                members.append(f)
    if not members:
        raise Skip("could not draw a family")
    return Family(A, tuple(members))


def _nonzero_points(A: Subspace) -> list:
    return [z for z, g in zip(A.points, A.generators) if any(g)]


def _isometry(inst: Instance, i: int = 0) -> LinearMap:
    T = inst.maps[i]
    if not verify_into_isometry(T):
        raise Skip("map is not an into-isometry")
    return T


def _form(inst: Instance, i: int = 0):
    return inst.forms[i] if i < len(inst.forms) else None


# suites


@suite("ORACLE", "random_subspace", "LP extremality and dual norm agree with vertex enumeration")
def check_oracle(inst, rng):
    A = inst.subspaces[0]
    ext = oracles.dual_vertices(A)
    for z in A.points:
        g = A.generator(z)
        if g.is_zero():
            continue
        expect(dual_norm(g) == oracles.dual_norm(A, g.coords), f"dual norm differs at {z}")
        lp_says = bool(is_extreme(A, g)) if dual_norm(g) == 1 else False
        expect(lp_says == (tuple(g.coords) in ext), f"extremality differs at {z}")


@suite("T3.1", "isometry_pair", "every extreme functional of A1* is a signed pulled-back generator")
def check_t31(inst, rng):
    T = _isometry(inst)
    ext = oracles.dual_vertices(T.domain)
    missing = ext - _pullback_set(T)
    expect(not missing, f"extreme functionals {sorted(missing)} are not pullbacks")


@suite("L4.1", "random_subspace", "for an exposed face D of the dual ball, ex D = D cap ext A*")
def check_l41(inst, rng):
    A = inst.subspaces[0]
    f = _random_element(rng, A)
    c, nf = A.coords(f), norm(f, A)
    face = set(oracles.face_vertices(A, [(c, nf)]))
    lib = {tuple(g.coords) for g in extreme_functionals(A) if g.apply_coords(c) == nf}
    expect(face == lib, f"ex D = {sorted(face)} but D cap ext = {sorted(lib)}")


@suite("L4.2", "random_subspace", "ex Sigma(G) is nonempty and equals Sigma(G) cap ext A*")
def check_l42(inst, rng):
    A = inst.subspaces[0]
    G = _random_family(rng, A, rng.randint(1, 4), rng.choice(m_set(A)))
    report = sigma_check(A, G)
    if not report.centered:
        raise Skip("family not centered")
    coords = [A.coords(f) for f in G]
    norms = [norm(f, A) for f in G]
    brute = oracles.sigma_vertices(A, coords, norms)
    lib = {tuple(g.coords) for g in report.extreme_members}
    expect(lib, "centered family with no extreme norming functional")
    expect(brute == lib, f"face enumeration {sorted(brute)} vs Sigma cap ext {sorted(lib)}")
    for ell in report.extreme_members:
        expect(report.member_test(ell), "extreme member fails the member test")
    # every member of Sigma is a convex combination of its extreme points
    for _, ell in report.faces:
        expect(report.member_test(ell), "face point fails the member test")
        expect(in_conv(ell, report.extreme_members), "Sigma member outside conv ex Sigma")


@suite("T4.1", "isometry_pair", "ex Sigma(G) lies in signed pullbacks over the common suppmax, inside ext")
def check_t41(inst, rng):
    T = _isometry(inst)
    A1 = T.domain
    G = _random_family(rng, A1, rng.randint(1, 3), rng.choice(m_set(A1)))
    TG = Family(T.codomain, tuple(T.apply(f) for f in G))
    # on a finite space TG is placed over the compact K = Z2
    expect(placed_over(TG, T.codomain.points), "TG not placed over Z2")
    coords = [A1.coords(f) for f in G]
    ex_sigma = oracles.sigma_vertices(A1, coords, [norm(f, A1) for f in G])
    if not ex_sigma:
        raise Skip("family not centered")
    common = set(T.codomain.points)
    for g in TG:
        common &= set(suppmax(g, T.codomain))
    ext = oracles.dual_vertices(A1)
    target = _pullback_set(T, [z for z in T.codomain.points if z in common]) & ext
    expect(ex_sigma <= target, f"ex Sigma(G) not inside T*Delta(S x spm) cap ext at {sorted(ex_sigma - target)}")
    expect(any(tuple(T.pullback(z).coords) in ext for z in common), "no extreme pullback over the common suppmax")


@suite("C4.1", "isometry_pair", "a family pinning z0 has Sigma(G) = T*Delta(S x {z0}), all extreme")
def check_c41(inst, rng):
    T = _isometry(inst)
    A1 = T.domain
    ab = property_alpha_beta(T)
    pinned = sorted(ab.beta_witnesses, key=T.codomain.points.index)
    if not pinned:
        raise Skip("no point is pinned by a family")
    z0 = rng.choice(pinned)
    G = ab.beta_witnesses[z0]
    common = set(T.codomain.points)
    for f in G:
        common &= set(suppmax(T.apply(f), T.codomain))
    expect(common == {z0}, "witness family does not pin z0")
    h = T.pullback(z0)
    expected = _signed([h.coords])
    pts = sigma_points(A1, G)
    expect(pts is not None, "some face of Sigma(G) is not a single point")
    expect({tuple(p.coords) for p in pts} == expected, "Sigma(G) differs from T*Delta(S x {z0})")
    brute = oracles.sigma_vertices(A1, [A1.coords(f) for f in G], [norm(f, A1) for f in G])
    expect(brute == expected, "vertex enumeration of Sigma(G) differs from T*Delta(S x {z0})")
    expect(tuple(h.coords) in oracles.dual_vertices(A1), "T*Delta(1, z0) is not extreme")


def _sup_inf(values):
    return (max(values, default=Fraction(0)), min(values, default=None))


@suite("P4.1", "isometry_pair", "either separation inequality forces L and T*Delta(S x (Z2 minus Q)) apart")
def check_p41(inst, rng):
    T = _isometry(inst)
    A1 = T.domain
    f = _random_element(rng, A1)
    c = A1.coords(f)
    gens = [A1.generator(z) for z in A1.points]
    L = [s * g for g in rng.sample(gens, rng.randint(1, len(gens))) for s in (1, -1)]
    lvals = [abs(ell.apply_coords(c)) for ell in L]
    h = {x: abs(T.pullback(x).apply_coords(c)) for x in T.codomain.points}
    if rng.random() < 0.5:
        # the choice in the proof of L7.1: Q collects the points where |Tf| is large
        Q = {x for x, v in h.items() if v >= min(lvals) / 2 and v > 0}
    else:
        Q = set(rng.sample(T.codomain.points, rng.randint(0, T.codomain.ambient.n)))
    rest = [x for x in T.codomain.points if x not in Q]
    sup_out, inf_out = _sup_inf([h[x] for x in rest])
    bullet1 = sup_out < min(lvals)
    bullet2 = inf_out is not None and inf_out > max(lvals)
    if not (bullet1 or bullet2):
        raise Skip("neither inequality holds")
    clash = {tuple(ell.coords) for ell in L} & _pullback_set(T, rest)
    expect(not clash, f"L meets T*Delta(S x (Z2 minus Q)) at {sorted(clash)}")


@suite("C4.2", "isometry_pair", "an extreme Delta(1, z0) separated from Z2 minus K is a pullback over K")
def check_c42(inst, rng):
    T = _isometry(inst)
    A1 = T.domain
    ext_pts = [z for z in A1.points if is_extreme_functional(A1, A1.generator(z))]
    z0 = rng.choice(ext_pts)
    g = A1.generator(z0)
    f = _random_element(rng, A1)
    c = A1.coords(f)
    target = abs(g.apply_coords(c))
    h = {x: abs(T.pullback(x).apply_coords(c)) for x in T.codomain.points}
    if rng.random() < 0.6:
        K = {x for x, v in h.items() if v >= target and v > 0}
    else:
        K = set(rng.sample(T.codomain.points, rng.randint(0, T.codomain.ambient.n)))
    rest = [x for x in T.codomain.points if x not in K]
    sup_out, inf_out = _sup_inf([h[x] for x in rest])
    if not (sup_out < target or (inf_out is not None and inf_out > target)):
        raise Skip("neither inequality holds")
    mine = _signed([g.coords])
    expect(not (mine & _pullback_set(T, rest)), "Delta(S x {z0}) meets the pullbacks off K")
    expect(mine <= _pullback_set(T, [x for x in T.codomain.points if x in K]), "Delta(S x {z0}) not in pullbacks over K")


@suite("P5.1", "random_subspace", "x ~ y iff Delta(lam, x) = Delta(mu, y) for some unimodular lam, mu")
def check_p51(inst, rng):
    A = inst.subspaces[0]
    for x in A.points:
        for y in A.points:
            v = sim_equiv(A, x, y)
            expect(bool(v) == oracles.sim_equiv(A, x, y), f"sim_equiv({x}, {y}) disagrees with the modulus test")
            if v:
                lam, mu = v.witness
                gx, gy = A.generators[A.ambient.index(x)], A.generators[A.ambient.index(y)]
                expect(all(lam * a == mu * b for a, b in zip(gx, gy)), "witness does not match")


@suite(
    "P5.2",
    "random_subspace",
    "no equivalent pairs across L x M iff Delta is injective on S x L and the images are disjoint",
    note="L restricted to points with nonzero evaluation functional",
)
def check_p52(inst, rng):
    A = inst.subspaces[0]
    live = _nonzero_points(A)
    if not live:
        raise Skip("all evaluation functionals vanish")
    L = rng.sample(live, rng.randint(1, len(live)))
    M = set(L) | set(rng.sample(A.points, rng.randint(0, A.ambient.n)))
    lhs = all(not sim_equiv(A, x, y) for x in L for y in M if x != y)
    images_L = [(s, x, tuple(s * v for v in A.generators[A.ambient.index(x)])) for x in L for s in (1, -1)]
    injective = len({im for _, _, im in images_L}) == len(images_L)
    off = _signed(A.generators[A.ambient.index(y)] for y in M if y not in L)
    disjoint = not (off & {im for _, _, im in images_L})
    expect(lhs == (injective and disjoint), f"L={L}, M={sorted(M)}: {lhs} vs ({injective}, {disjoint})")


def _extended_codomain(rng: random.Random, T: LinearMap):
    """A2' = span(T A1 + random extra functions) and T viewed as a map into it."""
    Z2 = T.codomain.ambient
    image = [T.apply(b) for b in T.domain.basis]
    extra = []
    for _ in range(rng.randint(0, 2)):
        extra.append(Z2.func([Fraction(rng.randint(-2, 2)) for _ in range(Z2.n)]))
    basis = list(image)
    for e in extra:
        try:
            Subspace(Z2, tuple(basis + [e]))
            basis.append(e)
        except LabError:
            pass
    B = Subspace(Z2, tuple(basis))
    d1 = T.domain.dim
    matrix = tuple(tuple(Fraction(int(i == j)) if i < d1 else Fraction(0) for j in range(d1)) for i in range(B.dim))
    return B, LinearMap(T.domain, B, matrix)


@suite("P6.1", "isometry_pair", "M_T is nonempty, ext A1* is in the pullbacks, and M_T meets every Y in Ch(A2')")
def check_p61(inst, rng):
    T = _isometry(inst)
    U = m_set(T)
    expect(U, "empty Choquet set")
    expect(oracles.dual_vertices(T.domain) <= _pullback_set(T), "ext A1* not inside T*Delta(S x Z2)")
    B, TB = _extended_codomain(rng, T)
    expect(verify_into_isometry(TB), "restricted map is not an isometry")
    Y = m_set(B)
    expect(ch_contains(B, Y), "M(A2') is not in Ch(A2')")
    expect(set(m_set(TB)) & set(Y), "M_T(A1) misses a member of Ch(A2')")


@suite("P6.2", "isometry_pair", "separation between Z1 minus V and W yields the two Choquet inclusions")
def check_p62(inst, rng):
    T = _isometry(inst)
    A1 = T.domain
    Z1 = A1.ambient
    V = set(rng.sample(A1.points, rng.randint(1, Z1.n)))
    f = _random_element(rng, A1)
    c = A1.coords(f)
    off_V = [abs(A1.generator(x).apply_coords(c)) for x in A1.points if x not in V]
    h = {z: abs(T.pullback(z).apply_coords(c)) for z in T.codomain.points}
    if off_V and rng.random() < 0.6:
        bound = min(off_V)
        W = {z for z, v in h.items() if v < bound}
    else:
        W = set(rng.sample(T.codomain.points, rng.randint(1, T.codomain.ambient.n)))
    if not W:
        raise Skip("W empty")
    sup_off, inf_off = _sup_inf(off_V)
    sup_W, inf_W = _sup_inf([h[z] for z in W])
    bullet1 = inf_off is not None and sup_W < inf_off
    bullet2 = inf_W > sup_off
    if not (bullet1 or bullet2):
        raise Skip("neither inequality holds")
    outside = _signed(A1.generator(x).coords for x in A1.points if x not in V)
    expect(not (outside & _pullback_set(T, W)), "Delta(S x (Z1 minus V)) meets T*Delta(S x W)")
    MA = set(m_set(A1))
    MT = set(m_set(T))
    left = _signed(A1.generator(x).coords for x in A1.points if x in MA & V)
    right = _pullback_set(T, [z for z in T.codomain.points if z in MT & W])
    expect(right <= left, "T*Delta(S x (M_T cap W)) not inside Delta(S x (M(A1) cap V))")


@suite("P6.3", "random_subspace", "with p = 1 and 1 in A, face extremality over l(1) = 1 gives M(A)")
def check_p63(inst, rng):
    A = inst.subspaces[0]
    Z = WeightedSpace(A.points, (1,) * A.ambient.n)
    ones = Z.func([1] * Z.n)
    basis = [ones]
    for b in A.basis:
        try:
            Subspace(Z, tuple(basis + [Z.func(b.values)]))
            basis.append(Z.func(b.values))
        except LabError:
            pass
    B = Subspace(Z, tuple(basis))
    got = prop63_set(B)
    expect(set(got) == set(oracles.m_set_identity(B)), "face extremality disagrees with vertex enumeration")


@suite("C6.1", "random_subspace", "every Y in Ch(A) meets suppmax(f) for every nonzero f")
def check_c61(inst, rng):
    A = inst.subspaces[0]
    keys = {}
    for z in m_set(A):
        keys.setdefault(A.generator(z).key, []).append(z)
    Y = [rng.choice(zs) for zs in keys.values()]
    for zs in keys.values():
        Y.extend(z for z in zs if rng.random() < 0.3)
    Y = set(Y)
    expect(ch_contains(A, Y), "constructed Y is not in Ch(A)")
    from isolab.choquet import boundary_meets_suppmax

    for _ in range(5):
        f = _random_element(rng, A, small=False)
        expect(boundary_meets_suppmax(A, f, Y), f"Y misses suppmax of {f}")


@suite("L7.1", "full_space_pair", "each norm-one functional avoids the pullbacks off some K", scale=Scale(6, 4, 4))
def check_l71(inst, rng):
    T = _isometry(inst)
    A1 = T.domain
    samples = list(extreme_functionals(A1))
    pulls = [T.pullback(x) for x in T.codomain.points]
    for _ in range(3):
        picks = rng.sample(pulls, rng.randint(1, len(pulls)))
        ell = Functional(A1, tuple(sum((Fraction(rng.randint(-3, 3)) * p.coords[k] for p in picks), Fraction(0)) for k in range(A1.dim)))
        if ell.is_zero():
            continue
        samples.append(ell * (1 / dual_norm(ell)))
    for ell in samples:
        f = dual_norm_maximizer(ell)
        val = abs(ell(f))
        expect(val > 0, "norming function has ell(f) = 0")
        K = [x for x in T.codomain.points if abs(T.pullback(x)(f)) >= val / 2]
        rest = [x for x in T.codomain.points if x not in K]
        expect(tuple(ell.coords) not in _pullback_set(T, rest), "functional is a pullback off K")


def _lemma72_family(T: LinearMap, z0) -> Family:
    """Preimages of functions peaking only at z0: here the single indicator of z0."""
    e = T.codomain.ambient.indicator(z0)
    return Family(T.domain, (T.inverse().apply(e),))


@suite("L7.2", "onto_pair", "an onto isometry between full spaces pins every point", scale=Scale(6, 4, 4))
def check_l72(inst, rng):
    T = _isometry(inst)
    expect(verify_onto_isometry(T), "map is not onto")
    Z2 = T.codomain.ambient
    for z0 in Z2.points:
        G = _lemma72_family(T, z0)
        TG = Family(T.codomain, tuple(T.apply(f) for f in G))
        expect(placed_over(TG, Z2.points), "TG not placed over Z2")
        common = set(Z2.points)
        for g in TG:
            common &= set(suppmax(g, T.codomain))
        expect(common == {z0}, f"family does not pin {z0}")
    ab = property_alpha_beta(T)
    expect(ab.beta is True, "beta fails for an onto map between full spaces")


@suite("P7.1", "isometry_pair", "with alpha, ext A1* is inside T*Delta(S x Z2)")
def check_p71(inst, rng):
    T = _isometry(inst)
    ab = property_alpha_beta(T)
    expect(ab.alpha, "alpha fails on a finite model")
    pulls = _pullback_set(T)
    for g in extreme_functionals(T.domain):
        expect(tuple(g.coords) in pulls, f"extreme {g} is not a pullback")


@suite("P7.2", ("isometry_pair", "onto_pair"), "with beta everywhere, T*Delta is well defined into ext and injective")
def check_p72(inst, rng):
    T = _isometry(inst)
    ab = property_alpha_beta(T)
    if ab.beta is not True:
        raise Skip("beta does not hold at every point")
    for x in T.codomain.points:
        expect(is_extreme_functional(T.domain, T.pullback(x)), f"T*Delta(1, {x}) is not extreme")
    expect(pairs_injective(T), "T*Delta is not injective on S x Z2")


@suite("T7.1", "isometry_pair", "alpha gives a surjection onto ext; alpha and beta give M_T = Z2 and a bijection")
def check_t71(inst, rng):
    T = _isometry(inst)
    U = m_set(T)
    expect(ch_contains(T, U), "M_T is not in Ch_T")
    ext = oracles.dual_vertices(T.domain)
    expect(_pullback_set(T, U) == ext, "T*Delta(S x M_T) differs from ext A1*")
    ab = property_alpha_beta(T)
    if ab.beta is True:
        expect(set(U) == set(T.codomain.points), "beta holds but M_T is not all of Z2")
        expect(pairs_injective(T), "T*Delta is not injective on S x Z2")
        expect(len(ext) == 2 * T.codomain.ambient.n, "T*Delta is not a bijection onto ext")


@suite("T7.2", "full_space_pair", "decompose recovers (phi, tau) on M_T; impostor forms are rejected", scale=Scale())
def check_t72(inst, rng):
    T = _isometry(inst)
    form = _form(inst)
    got = decompose(T)
    expect(check_identity(T, got), "recovered form does not reproduce T")
    expect(set(got.tau.values()) == set(T.domain.points), "tau is not surjective")
    if form is not None:
        expect(set(form.on) <= set(got.on), "generating set not inside M_T")
        expect(got.restrict(form.on).same_as(form), "recovered form differs from the generating form")
        rebuilt = weighted_composition_operator(T.domain, T.codomain, got).map
        expect(decompose(rebuilt).same_as(got), "round trip through the constructor changed the form")
    for fake in impostors(got, T.domain, rng, 1):
        expect(not check_identity(T, fake), "an impostor form reproduces T")
        expect(uniqueness_holds(T, got, fake), "uniqueness clause violated")


@suite(
    "C7.2-vacuity",
    "isometry_pair",
    "the 'M_T not closed' hypothesis never fires on a finite model",
    note="hypothesis never satisfiable on finite models",
)
def check_c72(inst, rng):
    T = _isometry(inst)
    expect(not choquet_set_not_closed(T), "a subset of a finite discrete space is not closed")


@suite("C7.3", "isometry_pair", "a composition operator is an into-isometry iff tau(U) is a boundary")
def check_c73(inst, rng):
    A1 = inst.subspaces[0]
    A2 = inst.subspaces[1]
    Z2 = A2.ambient
    U = tuple(rng.sample(Z2.points, rng.randint(1, Z2.n)))
    tau = {x: rng.choice(A1.points) for x in U}
    phi = {x: rng.choice(A1.field.signs()) for x in U}
    built = weighted_composition_operator(A1, A2, CompositionForm(U, phi, tau))
    exact = verify_into_isometry(built.map)
    expect(bool(built.is_isometry) == bool(exact), f"boundary criterion {bool(built.is_isometry)} vs exact {bool(exact)}")


@suite("C7.4", "composable_pair", "the composed form matches decompose of the product")
def check_c74(inst, rng):
    T1, T2 = _isometry(inst, 0), _isometry(inst, 1)
    f1, f2 = decompose(T1), decompose(T2)
    f3 = compose_forms(T1, f1, T2, f2)
    direct = decompose(T1.then(T2))
    expect(direct.restrict(f3.on).same_as(f3), "composition law fails")
    for x in f3.on:
        expect(f3.phi[x] == f2.phi[x] * f1.phi[f2.tau[x]], "phi3 != phi2 * phi1(tau2)")
        expect(f3.tau[x] == f1.tau[f2.tau[x]], "tau3 != tau1(tau2)")
    expect(set(f3.tau.values()) == set(T1.domain.points), "tau3 not onto Z1")


@suite("C7.5", "onto_pair", "the inverse form is (1 / phi o tau^-1, tau^-1) and matches decompose(T^-1)")
def check_c75(inst, rng):
    T = _isometry(inst)
    expect(verify_onto_isometry(T), "map is not onto")
    form = decompose(T)
    inv = invert_form(T, form)
    Ti = T.inverse()
    expect(decompose(Ti).same_as(inv), "inverse law fails")
    for y in inv.on:
        expect(inv.phi[y] * form.phi[inv.tau[y]] == 1, "phi' != 1 / phi(tau')")
        expect(form.tau[inv.tau[y]] == y, "tau' is not the inverse of tau")


@suite("R6.1", "isometry_pair", "M_T(A1) equals M(TA1) computed in the image subspace")
def check_r61(inst, rng):
    T = _isometry(inst)
    image = Subspace(T.codomain.ambient, tuple(T.apply(b) for b in T.domain.basis))
    expect(set(m_set(T)) == set(m_set(image)), "M_T(A1) != M(TA1)")


@suite("R6.3", "random_subspace", "M(A) is a boundary of A", scale=Scale())
def check_r63(inst, rng):
    A = inst.subspaces[0]
    U = m_set(A)
    expect(is_boundary(A, U), f"M(A) = {U} is not a boundary")


# running


@dataclass(frozen=True)
class Counterexample:
    trial: int
    instance: Instance = field(compare=False)
    message: str
    original_size: tuple
    shrunk_size: tuple


@dataclass
class SuiteReport:
    suite_id: str
    trials: int
    seed: int
    failures: list
    skipped: int
    status: str
    note: str = ""
    elapsed: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> int:
        return self.trials - self.skipped - len(self.failures)


def trial_rng(suite_id: str, seed: int, trial: int) -> random.Random:
    return random.Random(f"{suite_id}:{seed}:{trial}")


def evaluate(s: Suite, inst: Instance, rng: random.Random) -> tuple:
    """('pass' | 'skip' | 'fail', message)."""
    try:
        s.check(inst, rng)
    except Skip as exc:
        return "skip", str(exc)
    except NotIsometryError as exc:
        return "skip", str(exc)
    except (Failure, TheoremViolation) as exc:
        return "fail", str(exc)
    return "pass", ""


def run_suite(suite_id: str, trials: int, seed: int = 0, shrink: bool = True) -> SuiteReport:
    import time

    from isolab.harness.shrink import instance_size, shrink_instance

    if suite_id not in SUITES:
        raise LabError(f"unknown suite {suite_id!r}; known: {', '.join(SUITES)}")
    if trials < 0:
        raise LabError("trials must be nonnegative")
    s = SUITES[suite_id]
    start = time.perf_counter()
    failures, skipped = [], 0
    for t in range(trials):
        inst = gen_instance(seed * 1_000_003 + t, s.scale, s.kind_for(t))
        outcome, message = evaluate(s, inst, trial_rng(suite_id, seed, t))
        if outcome == "skip":
            skipped += 1
        elif outcome == "fail":
            small = inst
            if shrink:
                small = shrink_instance(inst, lambda i: evaluate(s, i, trial_rng(suite_id, seed, t))[0] == "fail")
                message = evaluate(s, small, trial_rng(suite_id, seed, t))[1]
            failures.append(Counterexample(t, small, message, instance_size(inst), instance_size(small)))
    status = "pass" if not failures else "fail"
    return SuiteReport(suite_id, trials, seed, failures, skipped, status, s.note, time.perf_counter() - start)
