from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from isolab.scalars import abs2, conj

if TYPE_CHECKING:
    from isolab.space import FunctionVec, Subspace


def class_key(coords) -> tuple:
    """A key shared exactly by vectors that agree up to a unimodular factor.

    Multiplying every coordinate by the conjugate of the first nonzero one
    cancels any unimodular factor and loses nothing else.
    """
    lead = next((c for c in coords if c != 0), None)
    if lead is None:
        return ("zero", len(coords))
    cl = conj(lead)
    return tuple(c * cl for c in coords)


@dataclass(frozen=True)
class Functional:
    """A linear functional on a subspace, stored as its values on the basis."""

    subspace: Subspace
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.subspace.dim:
            raise ValueError(f"expected {self.subspace.dim} coordinates, got {len(self.coords)}")

    def __call__(self, f: FunctionVec):
        c = self.subspace.coords(f)
        return sum((a * b for a, b in zip(self.coords, c)), Fraction(0))

    def apply_coords(self, c):
        return sum((a * b for a, b in zip(self.coords, c)), Fraction(0))

    def __mul__(self, s) -> Functional:
        return Functional(self.subspace, tuple(s * a for a in self.coords))

    __rmul__ = __mul__

    def __neg__(self) -> Functional:
        return Functional(self.subspace, tuple(-a for a in self.coords))

    def __add__(self, other: Functional) -> Functional:
        return Functional(self.subspace, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Functional) -> Functional:
        return Functional(self.subspace, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    @property
    def key(self) -> tuple:
        return class_key(self.coords)

    def unimodular_ratio(self, other: Functional):
        """lam with self == lam * other and |lam| = 1, or None."""
        k = next((i for i, v in enumerate(other.coords) if v != 0), None)
        if k is None:
            return self.subspace.field.coerce(1) if self.is_zero() else None
        lam = self.coords[k] / other.coords[k]
        if abs2(lam) != 1 or any(a != lam * b for a, b in zip(self.coords, other.coords)):
            return None
        return lam

    def __repr__(self):
        return "Functional(" + ", ".join(str(c) for c in self.coords) + ")"
