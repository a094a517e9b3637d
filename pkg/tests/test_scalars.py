from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from isolab.scalars import (
    COMPLEX,
    REAL,
    GaussianRational,
    I,
    abs2,
    discretization_order,
    dump_scalar,
    is_unimodular,
    parse_scalar,
    rational_sqrt,
    roots_of_unity,
)

rationals = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 20))
gaussians = st.builds(GaussianRational, rationals, rationals)


@pytest.mark.parametrize(
    "raw, expected",
    [(3, Fraction(3)), ("-2/6", Fraction(-1, 3)), ([5, 10], Fraction(1, 2))],
)
def test_parse_real(raw, expected):
    assert parse_scalar(raw) == expected


def test_parse_complex_forms():
    assert parse_scalar([[0, 1], [1, 1]], COMPLEX) == I
    assert parse_scalar({"re": "1/2", "im": -1}, COMPLEX) == GaussianRational(Fraction(1, 2), -1)


def test_floats_and_complex_in_real_field_are_rejected():
    with pytest.raises(TypeError):
        parse_scalar(0.5)
    with pytest.raises(Exception):
        parse_scalar([[0, 1], [1, 1]], REAL)


@given(gaussians)
def test_dump_parse_round_trip(z):
    assert parse_scalar(dump_scalar(z), COMPLEX) == z


@given(gaussians, gaussians)
def test_gaussian_field_axioms(z, w):
    assert (z * w).conjugate() == z.conjugate() * w.conjugate()
    assert abs2(z * w) == abs2(z) * abs2(w)
    if w != 0:
        assert (z / w) * w == z


def test_real_gaussian_hashes_like_fraction():
    assert hash(GaussianRational(Fraction(1, 3))) == hash(Fraction(1, 3))
    assert GaussianRational(2) == 2


def test_unimodular():
    assert is_unimodular(I) and is_unimodular(Fraction(-1))
    assert is_unimodular(GaussianRational(Fraction(3, 5), Fraction(4, 5)))
    assert not is_unimodular(Fraction(1, 2))


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert abs(rational_sqrt(Fraction(2)) - 2 ** 0.5) < 1e-12


def test_discretization_order(monkeypatch):
    monkeypatch.delenv("LAB_S_DISCRETIZATION", raising=False)
    assert discretization_order() == 16
    monkeypatch.setenv("LAB_S_DISCRETIZATION", "8")
    assert discretization_order() == 8
    assert len(roots_of_unity(8)) == 8
    monkeypatch.setenv("LAB_S_DISCRETIZATION", "2")
    with pytest.raises(ValueError):
        discretization_order()
