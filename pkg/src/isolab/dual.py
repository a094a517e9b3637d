"""Geometry of the dual unit ball of a finite weighted subspace.

The dual unit ball of A is the absolutely convex hull of the evaluation
functionals, so every question here reduces to small linear programs in the
hull coefficients. Real-field answers are exact (rational simplex with
re-checked certificates). For the complex field the unimodular circle is
replaced by m-th roots of unity and a floating LP is used; those answers are
tagged ``discretized(m)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from isolab import lp
from isolab.errors import LabError, NormalizationError, SizeError
from isolab.functional import Functional
from isolab.scalars import abs2, discretization_order, roots_of_unity, to_complex
from isolab.space import Family, FunctionVec, Subspace, norm, norm_sq
from isolab.verdict import Verdict

MAX_FAMILY = 20
FLOAT_TOL = 1e-9


@dataclass(frozen=True)
class GeneratorSystem:
    """Evaluation functionals of every point, grouped into equivalence classes."""

    subspace: Subspace
    generators: tuple
    classes: tuple

    @classmethod
    def of(cls, A: Subspace) -> GeneratorSystem:
        gens = tuple((z, A.generator(z)) for z in A.points)
        return cls(A, gens, A.classes)

    @property
    def representatives(self) -> tuple:
        return tuple(c[0] for c in self.classes)

    def functionals(self) -> list:
        return [g for _, g in self.generators]


def _hull_matrix(gens: Sequence[Functional], d: int) -> list:
    # columns +g_i and -g_i for every generator
    return [[s * g.coords[k] for g in gens for s in (1, -1)] for k in range(d)]


def _absconv_lp(target: Functional, gens: Sequence[Functional]) -> lp.LPResult:
    d = target.subspace.dim
    A_eq = _hull_matrix(gens, d)
    c = [Fraction(1)] * (2 * len(gens))
    res = lp.linprog(c, A_eq=A_eq, b_eq=list(target.coords))
    if not lp.check_certificate(res, c, A_eq=A_eq, b_eq=list(target.coords)):
        raise RuntimeError("simplex produced an invalid certificate")
    return res


def _float_absconv(target: Functional, gens: Sequence[Functional], m: int):
    """Min total weight representing target with gens rotated by m-th roots of unity."""
    from scipy.optimize import linprog as float_linprog

    d = target.subspace.dim
    roots = roots_of_unity(m)
    cols = []
    for g in gens:
        gc = np.array([to_complex(v) for v in g.coords])
        for w in roots:
            cols.append(w * gc)
    tc = np.array([to_complex(v) for v in target.coords])
    if not cols:
        return (0.0 if np.allclose(tc, 0) else None), None
    M = np.array(cols).T
    A_eq = np.vstack([M.real, M.imag])
    b_eq = np.concatenate([tc.real, tc.imag])
    res = float_linprog(np.ones(M.shape[1]), A_eq=A_eq, b_eq=b_eq, bounds=(0, None), method="highs")
    if res.status != 0:
        return None, None
    return float(res.fun), res.x


def dual_norm(ell: Functional):
    """max |ell(f)| over the unit ball of its subspace.

    Exact Fraction in the real field; in the complex field an upper bound from
    the discretized hull (float).
    """
    A = ell.subspace
    if ell.is_zero():
        return Fraction(0)
    gens = [A.generator(z) for z in A.points]
    if A.field.is_real:
        return _absconv_lp(ell, gens).fun
    val, _ = _float_absconv(ell, gens, discretization_order())
    return val


def dual_norm_maximizer(ell: Functional) -> FunctionVec:
    """A unit-ball element f with ell(f) = dual_norm(ell) (real field)."""
    A = ell.subspace
    res = _absconv_lp(ell, [A.generator(z) for z in A.points])
    return A.function(res.y_eq)


def in_absconv(target: Functional, gens: Sequence[Functional]) -> Verdict:
    """Whether target = sum c_i lam_i g_i with c_i >= 0, sum c_i <= 1, lam_i unimodular.

    Real field: the witness is either the list of signed coefficients
    (one per generator, sum of moduli <= 1) or a function f in the subspace
    with target(f) > max over the hull of m(f).
    """
    A = target.subspace
    if not A.field.is_real:
        m = discretization_order()
        val, _ = _float_absconv(target, gens, m)
        holds = val is not None and val <= 1 + FLOAT_TOL
        return Verdict(holds, confidence=f"discretized({m})")
    if target.is_zero():
        return Verdict(True, [Fraction(0)] * len(gens))
    if not gens:
        y = list(target.coords)
        return Verdict(False, A.function(y))
    res = _absconv_lp(target, gens)
    if res.optimal and res.fun <= 1:
        coeffs = [res.x[2 * i] - res.x[2 * i + 1] for i in range(len(gens))]
        return Verdict(True, coeffs)
    # optimal with fun > 1: y has |g.y| <= 1 and target.y = fun > 1
    # infeasible: y is a Farkas vector with g.y = 0 and target.y > 0
    return Verdict(False, A.function(res.y_eq))


def in_conv(target: Functional, points: Sequence[Functional]) -> Verdict:
    """Plain convex-hull membership (coefficients nonnegative, summing to one)."""
    if not points:
        return Verdict(False)
    d = target.subspace.dim
    A_eq = [[p.coords[k] for p in points] for k in range(d)] + [[1] * len(points)]
    b_eq = list(target.coords) + [1]
    c = [0] * len(points)
    res = lp.linprog(c, A_eq=A_eq, b_eq=b_eq)
    if not lp.check_certificate(res, c, A_eq=A_eq, b_eq=b_eq):
        raise RuntimeError("simplex produced an invalid certificate")
    if res.feasible:
        return Verdict(True, res.x)
    return Verdict(False, res.y_eq)


def _unit(A: Subspace, value) -> bool:
    if A.field.is_real:
        return value == 1
    return value is not None and abs(value - 1) <= 1e-7


def is_extreme(A: Subspace, ell: Functional) -> Verdict:
    """Whether ell is an extreme point of the dual unit ball of A.

    ``ell`` must have dual norm one. Extreme functionals are unimodular
    multiples of evaluation functionals, so ell is first matched against the
    generators; it is extreme iff it escapes the hull of the generators of all
    other classes. The witness of an extreme point is a function exposing it.
    """
    if ell.subspace != A:
        raise LabError("functional belongs to a different subspace")
    if not _unit(A, dual_norm(ell)):
        raise NormalizationError("is_extreme needs a functional of dual norm one")
    return _extreme_on_sphere(A, ell)


def _extreme_on_sphere(A: Subspace, ell: Functional) -> Verdict:
    confidence = A.field.confidence()
    key = ell.key
    gens = [A.generator(z) for z in A.points]
    if not any(g.key == key for g in gens):
        return Verdict(False, confidence=confidence, note="not a multiple of an evaluation functional")
    others = [g for g in gens if g.key != key]
    inside = in_absconv(ell, others)
    return Verdict(not inside.holds, inside.witness if not inside.holds else None, confidence)


@lru_cache(maxsize=4096)
def extreme_keys(A: Subspace) -> frozenset:
    """Class keys of the evaluation functionals that are extreme in the dual ball."""
    out = set()
    for cls in A.classes:
        g = A.generator(cls[0])
        if g.is_zero():
            continue
        if _unit(A, dual_norm(g)) and _extreme_on_sphere(A, g):
            out.add(g.key)
    return frozenset(out)


def is_extreme_functional(A: Subspace, ell: Functional) -> bool:
    """Extremality without the normalization precondition (False off the sphere)."""
    return not ell.is_zero() and ell.key in extreme_keys(A)


def extreme_functionals(A: Subspace) -> list:
    """ext of the dual ball: both signs of each extreme class (real field)."""
    out = []
    keys = extreme_keys(A)
    for cls in A.classes:
        g = A.generator(cls[0])
        if g.key in keys:
            out.extend([g, -g])
    return out


@dataclass
class SigmaReport:
    centered: bool
    member_test: Callable[[Functional], bool]
    extreme_members: list
    faces: list = field(default_factory=list)

    @property
    def witness(self):
        return self.faces[0][1] if self.faces else None


def _sigma_face_lp(A: Subspace, G: Family, pattern, objective=None):
    gens = [A.generator(z) for z in A.points]
    cols = [(g, s) for g in gens for s in (1, -1)]
    A_eq = []
    b_eq = []
    for f, sigma in zip(G, pattern):
        c = A.coords(f)
        A_eq.append([s * g.apply_coords(c) for g, s in cols])
        b_eq.append(sigma * norm(f, A))
    A_ub = [[1] * len(cols)]
    b_ub = [1]
    cost = [0] * len(cols)
    if objective is not None:
        cost = [s * g.coords[objective[0]] * objective[1] for g, s in cols]
    res = lp.linprog(cost, A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=b_eq)
    if not lp.check_certificate(res, cost, A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=b_eq):
        raise RuntimeError("simplex produced an invalid certificate")
    if not res.feasible:
        return res, None
    coords = [sum((t * s * g.coords[k] for t, (g, s) in zip(res.x, cols)), Fraction(0)) for k in range(A.dim)]
    return res, Functional(A, tuple(coords))


def sign_patterns(k: int):
    """Sign vectors with the first entry fixed to +1 (the rest follow by symmetry)."""
    for tail in itertools.product((1, -1), repeat=k - 1):
        yield (1,) + tail


def sigma_check(A: Subspace, G: Family) -> SigmaReport:
    """Norming functionals of a family: is the family centered, and which
    extreme functionals attain |l(f)| = ||f|| for every member.

    Real field only; ``faces`` lists each feasible sign pattern with one member.
    """
    if not A.field.is_real:
        raise LabError("sigma_check decides the real field only")
    if G.subspace != A:
        raise LabError("family belongs to a different subspace")
    if len(G) > MAX_FAMILY:
        raise SizeError(f"families are limited to {MAX_FAMILY} members")
    norms = [norm(f, A) for f in G]
    coords = [A.coords(f) for f in G]

    def member_test(ell: Functional) -> bool:
        if dual_norm(ell) != 1:
            return False
        return all(abs(ell.apply_coords(c)) == nf for c, nf in zip(coords, norms))

    faces = []
    for pattern in sign_patterns(len(G)):
        _, ell = _sigma_face_lp(A, G, pattern)
        if ell is not None:
            faces.append((pattern, ell))
            faces.append((tuple(-s for s in pattern), -ell))
    extreme_members = []
    for g in extreme_functionals(A):
        if all(abs(g.apply_coords(c)) == nf for c, nf in zip(coords, norms)):
            extreme_members.append(g)
    return SigmaReport(bool(faces), member_test, extreme_members, faces)


def sigma_face_is_point(A: Subspace, G: Family, pattern) -> Functional | None:
    """The unique member of the face for ``pattern`` if that face is a single point."""
    res, ell = _sigma_face_lp(A, G, pattern)
    if ell is None:
        return None
    for k in range(A.dim):
        lo, _ = _sigma_face_lp(A, G, pattern, objective=(k, 1))
        hi, _ = _sigma_face_lp(A, G, pattern, objective=(k, -1))
        if lo.fun != -hi.fun:
            return None
    return ell


def sigma_points(A: Subspace, G: Family):
    """Sigma(G) as a finite list when every face is a single point, else None."""
    pts = []
    for pattern in sign_patterns(len(G)):
        res, ell = _sigma_face_lp(A, G, pattern)
        if ell is None:
            continue
        p = sigma_face_is_point(A, G, pattern)
        if p is None:
            return None
        pts.extend([p, -p])
    return pts


def norm_attained(ell: Functional, f: FunctionVec) -> bool:
    A = ell.subspace
    return abs2(ell(f)) == norm_sq(f, A)
