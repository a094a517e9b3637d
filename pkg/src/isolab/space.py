"""Finite weighted sup-norm spaces C(Z; p) and their subspaces.

A :class:`WeightedSpace` is a finite ordered point set with a nonvanishing
weight. A :class:`Subspace` is spanned by linearly independent
:class:`FunctionVec` values on that space. The evaluation functional at a
point ``z`` scaled by a unimodular ``lam`` sends ``f`` to ``lam * p(z) * f(z)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from isolab import linalg
from isolab.errors import LabError, SpanError
from isolab.functional import Functional, class_key
from isolab.scalars import REAL, ScalarField, abs2, is_unimodular, rational_sqrt
from isolab.verdict import Verdict


@dataclass(frozen=True)
class WeightedSpace:
    points: tuple
    weight: tuple
    field: ScalarField = REAL

    def __post_init__(self):
        if isinstance(self.field, str):
            object.__setattr__(self, "field", ScalarField(self.field))
        pts = tuple(self.points)
        if not pts:
            raise LabError("a weighted space needs at least one point")
        if len(set(pts)) != len(pts):
            raise LabError("point identifiers must be distinct")
        if isinstance(self.weight, Mapping):
            w = tuple(self.field.coerce(self.weight[z]) for z in pts)
        else:
            w = tuple(self.field.coerce(v) for v in self.weight)
        if len(w) != len(pts):
            raise LabError("one weight per point is required")
        if any(v == 0 for v in w):
            raise LabError("weights must be nonzero")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "weight", w)

    @classmethod
    def uniform(cls, points: Iterable, field: ScalarField = REAL) -> WeightedSpace:
        pts = tuple(points)
        return cls(pts, (1,) * len(pts), field)

    @property
    def n(self) -> int:
        return len(self.points)

    @cached_property
    def _index(self) -> dict:
        return {z: i for i, z in enumerate(self.points)}

    def index(self, z) -> int:
        try:
            return self._index[z]
        except KeyError:
            raise LabError(f"unknown point {z!r}") from None

    def p(self, z):
        return self.weight[self.index(z)]

    def func(self, values) -> FunctionVec:
        if isinstance(values, Mapping):
            values = [values[z] for z in self.points]
        return FunctionVec(self, tuple(values))

    def indicator(self, z) -> FunctionVec:
        i = self.index(z)
        return FunctionVec(self, tuple(int(k == i) for k in range(self.n)))

    def full(self) -> Subspace:
        """The whole space C(Z; p) with the indicator basis."""
        return Subspace(self, tuple(self.indicator(z) for z in self.points))

    def sub(self, *basis) -> Subspace:
        return Subspace(self, tuple(self.func(b) for b in basis))

    def subset(self, Y) -> tuple:
        pts = tuple(z for z in self.points if z in set(Y))
        missing = set(Y) - set(pts)
        if missing:
            raise LabError(f"unknown points {sorted(map(str, missing))}")
        return pts


@dataclass(frozen=True)
class FunctionVec:
    space: WeightedSpace
    values: tuple

    def __post_init__(self):
        vals = tuple(self.space.field.coerce(v) for v in self.values)
        if len(vals) != self.space.n:
            raise LabError(f"expected {self.space.n} values, got {len(vals)}")
        object.__setattr__(self, "values", vals)

    def __getitem__(self, z):
        return self.values[self.space.index(z)]

    def __add__(self, other: FunctionVec) -> FunctionVec:
        return FunctionVec(self.space, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: FunctionVec) -> FunctionVec:
        return FunctionVec(self.space, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> FunctionVec:
        return FunctionVec(self.space, tuple(-a for a in self.values))

    def __mul__(self, s) -> FunctionVec:
        s = self.space.field.coerce(s)
        return FunctionVec(self.space, tuple(s * a for a in self.values))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def weighted(self) -> tuple:
        """The values p(z) f(z)."""
        return tuple(p * v for p, v in zip(self.space.weight, self.values))

    def __repr__(self):
        return "FunctionVec(" + ", ".join(str(v) for v in self.values) + ")"


@dataclass(frozen=True)
class Subspace:
    ambient: WeightedSpace
    basis: tuple

    def __post_init__(self):
        basis = tuple(b if isinstance(b, FunctionVec) else self.ambient.func(b) for b in self.basis)
        if not basis:
            raise LabError("a subspace needs at least one basis vector")
        if any(b.space != self.ambient for b in basis):
            raise LabError("basis vectors must live on the ambient space")
        object.__setattr__(self, "basis", basis)
        if linalg.rank([list(b.values) for b in basis]) != len(basis):
            raise LabError("basis is linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def field(self) -> ScalarField:
        return self.ambient.field

    @property
    def points(self) -> tuple:
        return self.ambient.points

    @cached_property
    def _solver(self):
        # pick dim independent point columns; coordinates then solve a square system
        cols = linalg.transpose([list(b.values) for b in self.basis])
        _, piv = linalg.rref(linalg.transpose(cols))
        square = [cols[i] for i in piv]
        return piv, linalg.inverse(square)

    def coords(self, f) -> tuple:
        """Basis coordinates of ``f``; raises SpanError when ``f`` is outside the span."""
        if isinstance(f, FunctionVec):
            if f.space != self.ambient:
                raise SpanError("function lives on a different space")
            vals = f.values
        else:
            vals = tuple(self.field.coerce(v) for v in f)
        piv, inv = self._solver
        c = linalg.matvec(inv, [vals[i] for i in piv])
        for i in range(self.ambient.n):
            if sum((ck * b.values[i] for ck, b in zip(c, self.basis)), Fraction(0)) != vals[i]:
                raise SpanError("function is not in the span of the subspace basis")
        return tuple(c)

    def contains(self, f) -> bool:
        try:
            self.coords(f)
        except SpanError:
            return False
        return True

    def function(self, coords: Sequence) -> FunctionVec:
        vals = [Fraction(0)] * self.ambient.n
        for c, b in zip(coords, self.basis):
            if c != 0:
                vals = [v + c * bv for v, bv in zip(vals, b.values)]
        return FunctionVec(self.ambient, tuple(vals))

    @cached_property
    def generators(self) -> tuple:
        """Coordinates of the evaluation functionals at each point, in point order."""
        out = []
        for i, z in enumerate(self.ambient.points):
            p = self.ambient.weight[i]
            out.append(tuple(p * b.values[i] for b in self.basis))
        return tuple(out)

    def generator(self, z) -> Functional:
        return Functional(self, self.generators[self.ambient.index(z)])

    def functional(self, coords: Sequence) -> Functional:
        return Functional(self, tuple(self.field.coerce(c) for c in coords))

    @cached_property
    def classes(self) -> tuple:
        """Points grouped by equivalence of their evaluation functionals, in instance order."""
        groups: dict = {}
        for z, g in zip(self.ambient.points, self.generators):
            groups.setdefault(class_key(g), []).append(z)
        return tuple(tuple(v) for v in groups.values())

    def class_of(self, z) -> tuple:
        return next(c for c in self.classes if z in c)

    def contains_constants(self) -> bool:
        return self.contains([1] * self.ambient.n)


@dataclass(frozen=True)
class Family:
    subspace: Subspace
    members: tuple

    def __post_init__(self):
        members = tuple(
            m if isinstance(m, FunctionVec) else self.subspace.ambient.func(m) for m in self.members
        )
        if not members:
            raise LabError("a family must be nonempty")
        for m in members:
            self.subspace.coords(m)
            if m.is_zero():
                raise LabError("family members must be nonzero")
        object.__setattr__(self, "members", members)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)


def norm_sq(f: FunctionVec, A: Subspace) -> Fraction:
    """Squared weighted sup norm, exact in both fields."""
    A.coords(f)
    return max(abs2(v) for v in f.weighted())


def norm(f: FunctionVec, A: Subspace):
    """max_z |p(z) f(z)|; exact Fraction for the real field.

    Complex norms are returned as a Fraction when rational and as a float
    otherwise; comparisons inside the library use :func:`norm_sq`.
    """
    if A.field.is_real:
        A.coords(f)
        return max(abs(v) for v in f.weighted())
    return rational_sqrt(norm_sq(f, A))


def delta(A: Subspace, lam, z) -> Functional:
    """The evaluation functional f -> lam * p(z) * f(z) on A."""
    lam = A.field.coerce(lam)
    if not is_unimodular(lam):
        raise LabError(f"lambda={lam} is not unimodular")
    g = A.generators[A.ambient.index(z)]
    return Functional(A, tuple(lam * c for c in g))


def suppmax(f: FunctionVec, A: Subspace) -> tuple:
    """Points where |p(z) f(z)| attains the norm, in instance order."""
    A.coords(f)
    if f.is_zero():
        raise LabError("suppmax is undefined for the zero function")
    w = [abs2(v) for v in f.weighted()]
    top = max(w)
    return tuple(z for z, v in zip(A.ambient.points, w) if v == top)


def placed_over(G: Family, V) -> bool:
    """True iff some member has sup of |p f| outside V strictly below its norm.

    The sup over an empty set is 0, so V = Z always gives True.
    """
    A = G.subspace
    V = set(A.ambient.subset(V))
    if not V:
        raise LabError("V must be nonempty")
    outside = [i for i, z in enumerate(A.ambient.points) if z not in V]
    for f in G:
        w = [abs2(v) for v in f.weighted()]
        off = max((w[i] for i in outside), default=Fraction(0))
        if off < max(w):
            return True
    return False


def sim_equiv(A: Subspace, x, y) -> Verdict:
    """Whether x and y carry evaluation functionals equal up to a unimodular factor.

    On success the witness is ``(lam, mu)`` with delta(A, lam, x) == delta(A, mu, y);
    lam is always 1.
    """
    gx = A.generators[A.ambient.index(x)]
    gy = A.generators[A.ambient.index(y)]
    one = A.field.coerce(1)
    if all(v == 0 for v in gx) and all(v == 0 for v in gy):
        return Verdict(True, (one, one))
    k = next((i for i, v in enumerate(gy) if v != 0), None)
    if k is None:
        return Verdict(False)
    mu = gx[k] / gy[k]
    if not is_unimodular(mu) or any(a != mu * b for a, b in zip(gx, gy)):
        return Verdict(False)
    return Verdict(True, (one, mu))


def distinguishes(A: Subspace, V) -> bool:
    V = A.ambient.subset(V)
    if not V:
        raise LabError("V must be nonempty")
    for i, x in enumerate(V):
        for y in V[i + 1:]:
            if sim_equiv(A, x, y):
                return False
    return True


def is_boundary(A: Subspace, Y) -> Verdict:
    """Whether the sup over Y already gives the norm of every element of A.

    Decided by checking that each evaluation functional outside Y lies in the
    absolutely convex hull of those on Y. A failing verdict carries a function
    of norm one whose sup over Y is strictly smaller.
    """
    from isolab.dual import in_absconv

    Y = A.ambient.subset(Y)
    if not Y:
        raise LabError("Y must be nonempty")
    inside = [A.generator(y) for y in Y]
    keys = {g.key for g in inside}
    confidence = A.field.confidence()
    for z in A.ambient.points:
        if z in Y:
            continue
        g = A.generator(z)
        if g.key in keys:
            continue
        verdict = in_absconv(g, inside)
        if not verdict:
            f = None
            if verdict.witness is not None:
                f = verdict.witness
                nf = norm(f, A)
                if isinstance(nf, Fraction):
                    f = f * (1 / nf)
            return Verdict(False, f, confidence, note=f"evaluation at {z!r} escapes the hull")
    return Verdict(True, confidence=confidence)
