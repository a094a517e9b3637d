"""Isometries as weighted composition operators.

An into-isometry T restricted to its Choquet set factors as

    p2(x) (Tf)(x) = phi(x) p1(tau(x)) f(tau(x)),

with phi unimodular and tau onto the domain points carrying extreme
functionals. :func:`decompose` recovers (phi, tau) by matching each extreme
pullback against the domain's evaluation functionals.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, NamedTuple

from isolab import lp
from isolab.choquet import _m_set, m_set
from isolab.dual import extreme_keys
from isolab.errors import AmbiguityError, LabError, TheoremViolation
from isolab.maps import LinearMap, require_isometry, verify_into_isometry, verify_onto_isometry
from isolab.scalars import is_unimodular
from isolab.space import Family, Subspace, is_boundary, suppmax
from isolab.verdict import Verdict

__all__ = [
    "AlphaBeta",
    "CompositionForm",
    "LinearMap",
    "WeightedComposition",
    "check_identity",
    "compose_forms",
    "decompose",
    "invert_form",
    "property_alpha_beta",
    "uniqueness_holds",
    "verify_into_isometry",
    "verify_onto_isometry",
    "weighted_composition_operator",
]


@dataclass(frozen=True)
class CompositionForm:
    """phi: on -> unimodular scalars and tau: on -> domain points.

    ``classes`` optionally records, for each x, every domain point equivalent
    to tau(x); decompose fills it in.
    """

    on: tuple
    phi: Mapping
    tau: Mapping
    classes: Mapping = field(default_factory=dict, compare=False)

    def __post_init__(self):
        on = tuple(self.on)
        if set(self.phi) != set(on) or set(self.tau) != set(on):
            raise LabError("phi and tau must be defined exactly on the form's set")
        for x in on:
            if not is_unimodular(self.phi[x]):
                raise LabError(f"phi({x!r}) = {self.phi[x]} is not unimodular")
        object.__setattr__(self, "on", on)
        object.__setattr__(self, "phi", dict(self.phi))
        object.__setattr__(self, "tau", dict(self.tau))

    def restrict(self, U) -> CompositionForm:
        U = tuple(x for x in self.on if x in set(U))
        return CompositionForm(
            U,
            {x: self.phi[x] for x in U},
            {x: self.tau[x] for x in U},
            {x: self.classes[x] for x in U if x in self.classes},
        )

    def same_as(self, other: CompositionForm) -> bool:
        return (
            set(self.on) == set(other.on)
            and all(self.phi[x] == other.phi[x] for x in self.on)
            and all(self.tau[x] == other.tau[x] for x in self.on)
        )

    def __hash__(self):
        return hash((self.on, tuple(self.phi[x] for x in self.on), tuple(self.tau[x] for x in self.on)))


class WeightedComposition(NamedTuple):
    map: LinearMap
    is_isometry: Verdict


def weighted_composition_operator(A1: Subspace, A2: Subspace, form: CompositionForm) -> WeightedComposition:
    """The map with p2(x) (Tf)(x) = phi(x) p1(tau(x)) f(tau(x)) on the form's set, 0 elsewhere.

    ``is_isometry`` holds iff tau of the form's set is a boundary of A1.
    """
    Z1, Z2 = A1.ambient, A2.ambient
    for x in form.on:
        Z2.index(x)
        if form.tau[x] not in set(Z1.points):
            raise LabError(f"tau({x!r}) = {form.tau[x]!r} is not a domain point")
    K = [[Fraction(0)] * Z1.n for _ in range(Z2.n)]
    for x in form.on:
        y = form.tau[x]
        K[Z2.index(x)][Z1.index(y)] = A2.field.coerce(form.phi[x]) * Z1.p(y) / Z2.p(x)
    T = LinearMap.from_values(A1, A2, K)
    image = {form.tau[x] for x in form.on}
    iso = is_boundary(A1, image) if image else Verdict(False, note="empty support")
    return WeightedComposition(T, iso)


def check_identity(T: LinearMap, form: CompositionForm) -> bool:
    """Does T act as the weighted composition given by ``form`` on the form's set?"""
    A1 = T.domain
    for x in form.on:
        h = T.pullback(x)
        g = A1.generator(form.tau[x])
        if h.coords != tuple(form.phi[x] * c for c in g.coords):
            return False
    return True


def decompose(T: LinearMap, strict: bool = False) -> CompositionForm:
    """Recover (phi, tau) on the Choquet set of an into-isometry.

    When several domain points share the matched functional class, tau picks
    the first in instance order and ``classes`` lists the whole class;
    ``strict=True`` raises AmbiguityError instead.
    """
    require_isometry(T)
    A1 = T.domain
    U = _m_set(T)
    phi, tau, classes = {}, {}, {}
    for x in U:
        h = T.pullback(x)
        cls = next(c for c in A1.classes if A1.generator(c[0]).key == h.key)
        if strict and len(cls) > 1:
            raise AmbiguityError(f"evaluation functionals coincide on the class {list(cls)}")
        rep = cls[0]
        lam = h.unimodular_ratio(A1.generator(rep))
        if lam is None:
            raise TheoremViolation(f"pullback at {x!r} is not a unimodular multiple of a generator")
        phi[x], tau[x], classes[x] = lam, rep, cls
    form = CompositionForm(U, phi, tau, classes)
    if not check_identity(T, form):
        raise TheoremViolation("recovered (phi, tau) does not reproduce T")
    hit = set(tau.values())
    reps = {c[0] for c in A1.classes if A1.generator(c[0]).key in extreme_keys(A1)}
    if hit != reps:
        raise TheoremViolation("tau is not onto the extreme classes of the domain")
    return form


def uniqueness_holds(T: LinearMap, form: CompositionForm, other: CompositionForm) -> bool:
    """False only if ``other`` reproduces T somewhere and disagrees with ``form``."""
    if not other.on or not check_identity(T, other):
        return True
    if not set(other.on) <= set(form.on):
        return False
    for x in other.on:
        if other.tau[x] == form.tau[x]:
            if other.phi[x] != form.phi[x]:
                return False
        elif other.tau[x] not in form.classes.get(x, ()):
            return False
        # inside a nontrivial class phi absorbs the ratio between the two generators
    return True


def compose_forms(T1: LinearMap, form1: CompositionForm, T2: LinearMap, form2: CompositionForm) -> CompositionForm:
    """The form of T2 o T1 on tau2^{-1}(on1): phi3 = phi2 * phi1(tau2), tau3 = tau1(tau2).

    Cross-checked against decompose of the product matrix.
    """
    if form1 is None or form2 is None:
        raise LabError("both maps must be decomposed first")
    if T1.codomain != T2.domain:
        raise LabError("codomain of T1 differs from the domain of T2")
    on1 = set(form1.on)
    U = tuple(x for x in form2.on if form2.tau[x] in on1)
    phi = {x: form2.phi[x] * form1.phi[form2.tau[x]] for x in U}
    tau = {x: form1.tau[form2.tau[x]] for x in U}
    form3 = CompositionForm(U, phi, tau)
    if not U:
        raise TheoremViolation("tau2^{-1}(M_T1) is empty")
    T3 = T1.then(T2)
    direct = decompose(T3)
    if not set(U) <= set(direct.on):
        raise TheoremViolation("tau2^{-1}(M_T1) is not inside M_T3")
    if not direct.restrict(U).same_as(form3):
        raise TheoremViolation("composition law disagrees with decompose(T2 T1)")
    if set(tau.values()) != set(direct.tau.values()):
        raise TheoremViolation("tau3 restricted to tau2^{-1}(M_T1) is not onto")
    return form3


def invert_form(T: LinearMap, form: CompositionForm) -> CompositionForm:
    """The form of T^{-1}: tau' = tau^{-1}, phi'(y) = 1 / phi(tau'(y))."""
    if not verify_onto_isometry(T):
        raise LabError("map is not onto")
    Z1, Z2 = T.domain.points, T.codomain.points
    if set(form.on) != set(Z2) or sorted(map(str, form.tau.values())) != sorted(map(str, Z1)):
        raise TheoremViolation("tau of an onto isometry is not a bijection")
    tau_inv = {form.tau[x]: x for x in form.on}
    on = tuple(y for y in Z1)
    phi = {y: 1 / form.phi[tau_inv[y]] for y in on}
    result = CompositionForm(on, phi, tau_inv)
    direct = decompose(T.inverse())
    if not direct.same_as(result):
        raise TheoremViolation("inverse law disagrees with decompose(T^-1)")
    return result


@dataclass
class AlphaBeta:
    alpha: bool
    alpha_note: str
    beta: bool | None
    beta_by_point: dict
    beta_witnesses: dict


def _face_range(T: LinearMap, z0, w):
    """min and max of h_w . c over {c : h_z0 . c = 1, |h_x . c| <= 1}."""
    pulls = [T.pullback(x) for x in T.codomain.points]
    h0 = T.pullback(z0)
    hw = T.pullback(w)
    A_ub = [list(h.coords) for h in pulls] + [[-v for v in h.coords] for h in pulls]
    b_ub = [1] * (2 * len(pulls))
    A_eq = [list(h0.coords)]
    out = []
    for sgn in (1, -1):
        cost = [sgn * v for v in hw.coords]
        res = lp.linprog(cost, A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=[1], free=True)
        if not lp.check_certificate(res, cost, A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=[1], free=True):
            raise RuntimeError("simplex produced an invalid certificate")
        if not res.feasible:
            return None
        out.append((sgn * res.fun, res.x))
    return out


def _pins(T: LinearMap, G, z0) -> bool:
    common = None
    for f in G:
        s = set(suppmax(T.apply(f), T.codomain))
        common = s if common is None else common & s
    return common == {z0}


def _beta_at_exact(T: LinearMap, z0):
    A1 = T.domain
    others = [w for w in T.codomain.points if w != z0]
    if not others:
        return "true", Family(A1, (A1.basis[0],))
    members = []
    for w in others:
        rng = _face_range(T, z0, w)
        if rng is None:
            return "false", None
        (lo, c_lo), (hi, c_hi) = rng
        if abs(lo) < 1:
            c = c_lo
        elif abs(hi) < 1:
            c = c_hi
        elif lo == -1 and hi == 1:
            c = [(a + b) / 2 for a, b in zip(c_lo, c_hi)]
        else:
            return "false", None
        f = A1.function(c)
        if f not in members:
            members.append(f)
    G = Family(A1, tuple(members))
    if not _pins(T, G, z0):
        raise TheoremViolation(f"constructed family does not pin {z0!r}")
    return "true", G


def _beta_at_search(T: LinearMap, z0, budget: int, rng: random.Random):
    A1, A2 = T.domain, T.codomain
    candidates = list(A1.basis)
    e = A2.ambient.indicator(z0)
    if verify_onto_isometry(T) and A2.contains(e):
        # the preimage of an indicator pins z0 on its own
        candidates.append(T.inverse().apply(e))
    field = A1.field
    for _ in range(budget):
        coords = [field.coerce(Fraction(rng.randint(-8, 8), rng.randint(1, 8))) for _ in range(A1.dim)]
        if any(c != 0 for c in coords):
            candidates.append(A1.function(coords))
    hits = [f for f in candidates if not f.is_zero() and z0 in suppmax(T.apply(f), A2)]
    common = set(A2.points)
    for f in hits:
        common &= set(suppmax(T.apply(f), A2))
    if hits and common == {z0}:
        return "true", Family(A1, tuple(dict.fromkeys(hits)))
    return "unknown", None


def property_alpha_beta(T: LinearMap, budget: int = 10_000, seed: int = 0) -> AlphaBeta:
    """Properties (alpha) and (beta) of an into-isometry on a finite model.

    (alpha) always holds with K = Z. (beta) at z0 asks for a family whose
    images all attain their norm at z0 and have no other common such point;
    in the real field this is decided exactly, point pair by point pair, by
    LPs over the face of the unit ball normed at z0.
    """
    require_isometry(T)
    by_point, witnesses = {}, {}
    rng = random.Random(seed)
    for z0 in T.codomain.points:
        if T.domain.field.is_real:
            status, G = _beta_at_exact(T, z0)
        else:
            status, G = _beta_at_search(T, z0, budget, rng)
        by_point[z0] = status
        if G is not None:
            witnesses[z0] = G
    values = set(by_point.values())
    beta = False if "false" in values else (None if "unknown" in values else True)
    return AlphaBeta(True, "finite: K=Z", beta, by_point, witnesses)


def discrete_closure(points, U) -> set:
    """Closure of U in the discrete topology on ``points``: U itself."""
    return {z for z in points if z in set(U)}


def choquet_set_not_closed(T: LinearMap) -> bool:
    """Hypothesis of the vanishing-on-the-closure corollary; dead on finite models."""
    U = set(m_set(T))
    return discrete_closure(T.codomain.points, U) != U


def impostors(form: CompositionForm, A1: Subspace, rng: random.Random, count: int) -> list:
    """Forms that differ from ``form`` at one point (phi flipped or tau moved)."""
    out = []
    signs = A1.field.signs()
    for _ in range(count):
        if not form.on:
            break
        x = rng.choice(form.on)
        phi, tau = dict(form.phi), dict(form.tau)
        if rng.random() < 0.5 or A1.ambient.n == 1:
            phi[x] = rng.choice([s for s in signs if s != phi[x]])
        else:
            tau[x] = rng.choice([z for z in A1.points if z != tau[x]])
            if rng.random() < 0.5:
                phi[x] = rng.choice(signs)
        U = tuple(rng.sample(form.on, rng.randint(1, len(form.on))))
        if x not in U:
            U = U + (x,)
        out.append(CompositionForm(U, {y: phi[y] for y in U}, {y: tau[y] for y in U}))
    return out


def pairs_injective(T: LinearMap) -> bool:
    """(lam, x) -> lam T*Delta(1, x) is injective on S x Z2 (real: no pullback is 0 or +-another)."""
    keys = []
    for x in T.codomain.points:
        h = T.pullback(x)
        if h.is_zero():
            return False
        keys.append(h.key)
    return len(set(keys)) == len(keys)


def all_sign_forms(form: CompositionForm):
    """Every phi obtained by flipping signs; used for brute-force uniqueness checks."""
    for signs in itertools.product((1, -1), repeat=len(form.on)):
        yield CompositionForm(form.on, dict(zip(form.on, map(Fraction, signs))), form.tau)
