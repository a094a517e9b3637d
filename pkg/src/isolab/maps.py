"""Linear maps between subspaces and the into/onto isometry tests."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from isolab import linalg
from isolab.dual import in_absconv
from isolab.errors import LabError, NotIsometryError
from isolab.functional import Functional
from isolab.space import FunctionVec, Subspace, norm
from isolab.verdict import Verdict


@dataclass(frozen=True)
class LinearMap:
    """T: domain -> codomain as a (codomain dim) x (domain dim) coordinate matrix."""

    domain: Subspace
    codomain: Subspace
    matrix: tuple

    def __post_init__(self):
        field = self.codomain.field
        rows = tuple(tuple(field.coerce(v) for v in row) for row in self.matrix)
        if len(rows) != self.codomain.dim or any(len(r) != self.domain.dim for r in rows):
            raise LabError(
                f"matrix must be {self.codomain.dim} x {self.domain.dim} in the two basis orders"
            )
        object.__setattr__(self, "matrix", rows)

    @classmethod
    def identity(cls, A: Subspace) -> LinearMap:
        return cls(A, A, tuple(tuple(int(i == j) for j in range(A.dim)) for i in range(A.dim)))

    @classmethod
    def from_values(cls, A1: Subspace, A2: Subspace, K: Sequence[Sequence]) -> LinearMap:
        """Build T from an n2 x n1 matrix acting on point values: (Tf) = K f."""
        K = [[A2.field.coerce(v) for v in row] for row in K]
        if len(K) != A2.ambient.n or any(len(r) != A1.ambient.n for r in K):
            raise LabError("value matrix must be (codomain points) x (domain points)")
        cols = []
        for b in A1.basis:
            image = A2.ambient.func(linalg.matvec(K, list(b.values)))
            cols.append(A2.coords(image))
        return cls(A1, A2, tuple(zip(*cols)) if cols else ())

    @property
    def dims(self) -> tuple:
        return self.codomain.dim, self.domain.dim

    def apply(self, f: FunctionVec) -> FunctionVec:
        c = self.domain.coords(f)
        return self.codomain.function(linalg.matvec([list(r) for r in self.matrix], c))

    def apply_coords(self, c) -> list:
        return linalg.matvec([list(r) for r in self.matrix], c)

    def pullback(self, x) -> Functional:
        """T* applied to the evaluation functional of the codomain at x."""
        g = self.codomain.generators[self.codomain.ambient.index(x)]
        coords = tuple(
            sum((g[i] * self.matrix[i][j] for i in range(len(g))), Fraction(0)) for j in range(self.domain.dim)
        )
        return Functional(self.domain, coords)

    def pullbacks(self) -> dict:
        return {x: self.pullback(x) for x in self.codomain.points}

    def then(self, other: LinearMap) -> LinearMap:
        """other o self."""
        if self.codomain != other.domain:
            raise LabError("maps are not composable")
        prod = linalg.matmul([list(r) for r in other.matrix], [list(r) for r in self.matrix])
        return LinearMap(self.domain, other.codomain, tuple(tuple(r) for r in prod))

    def inverse(self) -> LinearMap:
        if self.domain.dim != self.codomain.dim:
            raise LabError("only square maps can be inverted")
        inv = linalg.inverse([list(r) for r in self.matrix])
        return LinearMap(self.codomain, self.domain, tuple(tuple(r) for r in inv))

    def rank(self) -> int:
        return linalg.rank([list(r) for r in self.matrix])


def verify_into_isometry(T: LinearMap) -> Verdict:
    """Whether ||Tf|| = ||f|| for every f in the domain.

    Both norms are sup norms over finitely many functionals, so equality for
    all f is equality of the two absolutely convex hulls: the domain's
    evaluation functionals against their pullbacks. On failure the witness is
    a domain function f with ||Tf|| != ||f||.
    """
    if not T.domain.field.is_real:
        return _verify_cached.__wrapped__(T)
    return _verify_cached(T)


@lru_cache(maxsize=4096)
def _verify_cached(T: LinearMap) -> Verdict:
    A1 = T.domain
    confidence = A1.field.confidence()
    gens = [A1.generator(z) for z in A1.points]
    pulls = [T.pullback(x) for x in T.codomain.points]
    gen_keys = {g.key for g in gens}
    pull_keys = {h.key for h in pulls}
    seen = set()
    for g in gens:
        if g.key in pull_keys or g.key in seen or g.is_zero():
            continue
        seen.add(g.key)
        v = in_absconv(g, pulls)
        if not v:
            return Verdict(False, _plain_witness(T, v.witness), confidence, "norm shrinks")
    seen = set()
    for h in pulls:
        if h.key in gen_keys or h.key in seen or h.is_zero():
            continue
        seen.add(h.key)
        v = in_absconv(h, gens)
        if not v:
            return Verdict(False, _plain_witness(T, v.witness), confidence, "norm grows")
    return Verdict(True, confidence=confidence)


def _plain_witness(T: LinearMap, f: FunctionVec) -> FunctionVec:
    # report a basis function when one already exhibits the defect
    if not T.domain.field.is_real:
        return f
    for b in T.domain.basis:
        if norm(T.apply(b), T.codomain) != norm(b, T.domain):
            return b
    return f


def require_isometry(T: LinearMap) -> None:
    v = verify_into_isometry(T)
    if not v:
        raise NotIsometryError(f"map is not an into-isometry ({v.note}); witness {v.witness}")


def verify_onto_isometry(T: LinearMap) -> bool:
    require_isometry(T)
    return T.rank() == T.codomain.dim
