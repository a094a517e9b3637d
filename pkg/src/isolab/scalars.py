"""Exact scalars for the real and complex fields.

Real scalars are :class:`fractions.Fraction`. Complex scalars are
:class:`GaussianRational`, a pair of fractions. Moduli of complex numbers are
generally irrational, so comparisons of moduli go through :func:`abs2`.
"""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Union


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def _lift(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(Fraction(other))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("division by zero")
        num = self * o.conjugate()
        return GaussianRational(num.re / den, num.im / den)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


Scalar = Union[Fraction, GaussianRational]

I = GaussianRational(0, 1)


def abs2(x) -> Fraction:
    """Squared modulus, exact for both fields."""
    if isinstance(x, GaussianRational):
        return x.re * x.re + x.im * x.im
    return Fraction(x) * Fraction(x)


def modulus(x):
    """|x| as a Fraction when it is rational, otherwise as a float."""
    if not isinstance(x, GaussianRational):
        return abs(Fraction(x))
    return rational_sqrt(abs2(x))


def rational_sqrt(q: Fraction):
    q = Fraction(q)
    n, d = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return math.sqrt(q)


def conj(x):
    return x.conjugate() if isinstance(x, GaussianRational) else x


def is_unimodular(x) -> bool:
    return abs2(x) == 1


def to_complex(x) -> complex:
    return complex(x) if isinstance(x, GaussianRational) else complex(float(x), 0.0)


def discretization_order() -> int:
    """Root-of-unity order used for the complex unimodular set (env LAB_S_DISCRETIZATION)."""
    raw = os.environ.get("LAB_S_DISCRETIZATION", "16")
    try:
        m = int(raw)
    except ValueError as exc:
        raise ValueError(f"LAB_S_DISCRETIZATION must be an integer, got {raw!r}") from exc
    if m < 4:
        raise ValueError("LAB_S_DISCRETIZATION must be at least 4")
    return m


def roots_of_unity(m: int) -> list[complex]:
    return [cmath.exp(2j * math.pi * k / m) for k in range(m)]


@dataclass(frozen=True)
class ScalarField:
    tag: str = "real"

    def __post_init__(self):
        if self.tag not in ("real", "complex"):
            raise ValueError(f"unknown scalar field {self.tag!r}")

    @property
    def is_real(self) -> bool:
        return self.tag == "real"

    def coerce(self, x) -> Scalar:
        """Convert ``x`` into this field's exact scalar type."""
        if isinstance(x, GaussianRational):
            if self.is_real:
                if x.im != 0:
                    raise ValueError(f"complex value {x} in a real space")
                return x.re
            return x
        if isinstance(x, complex):
            raise TypeError("floating complex values are not exact; use GaussianRational")
        if isinstance(x, float):
            raise TypeError("floats are not exact scalars; use Fraction or a 'p/q' string")
        q = Fraction(x)
        return q if self.is_real else GaussianRational(q)

    def signs(self) -> tuple:
        """The exact part of the unimodular set: {1, -1} (plus {i, -i} when complex)."""
        if self.is_real:
            return (Fraction(1), Fraction(-1))
        return (GaussianRational(1), GaussianRational(-1), I, -I)

    def confidence(self) -> str:
        return "exact" if self.is_real else f"discretized({discretization_order()})"


REAL = ScalarField("real")
COMPLEX = ScalarField("complex")


def parse_scalar(raw, field: ScalarField = REAL) -> Scalar:
    """Read a scalar from the JSON instance encodings.

    Accepted: int, "p/q" string, [num, den], and for complex values a pair of
    real encodings [[re_num, re_den], [im_num, im_den]] or {"re": .., "im": ..}.
    """
    if isinstance(raw, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(raw, dict):
        return field.coerce(GaussianRational(parse_scalar(raw["re"]), parse_scalar(raw.get("im", 0))))
    if isinstance(raw, (list, tuple)):
        if len(raw) != 2:
            raise ValueError(f"cannot parse scalar {raw!r}")
        a, b = raw
        if isinstance(a, (list, tuple, str, dict)) or isinstance(b, (list, tuple, str, dict)):
            return field.coerce(GaussianRational(parse_scalar(a), parse_scalar(b)))
        return field.coerce(Fraction(int(a), int(b)))
    if isinstance(raw, float):
        raise TypeError("floats are not exact scalars")
    return field.coerce(Fraction(raw))


def dump_scalar(x):
    if isinstance(x, GaussianRational):
        return [[x.re.numerator, x.re.denominator], [x.im.numerator, x.im.denominator]]
    q = Fraction(x)
    return [q.numerator, q.denominator]


def format_scalar(x) -> str:
    return str(x)
