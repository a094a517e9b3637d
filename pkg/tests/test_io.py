import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from isolab import io
from isolab.errors import LabError
from isolab.harness.generate import KINDS, SMALL, gen_instance
from isolab.isometry import decompose
from isolab.scalars import COMPLEX, I, dump_scalar, parse_scalar

DATA = Path(__file__).resolve().parents[1] / "data" / "worked_examples.json"


def test_worked_examples_load():
    doc = io.load(DATA)
    assert set(doc.subspaces) == {"A", "B", "C1", "C2"}
    T = doc.map("T")
    assert T.apply(T.domain.ambient.func((2, 4))).values == (2, -4, 3)
    assert doc.subspace("B").basis[1].values == (0, Fraction(1, 2), 1)


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("seed", range(4))
def test_round_trip(kind, seed):
    doc = gen_instance(seed, SMALL, kind).to_document()
    again = io.loads(io.dumps(doc))
    assert again.subspaces == doc.subspaces
    assert again.maps == doc.maps
    for name, (m, form) in doc.forms.items():
        assert again.forms[name][0] == m
        assert again.form(name).same_as(form)


def test_form_json_matches_decompose(T_avg):
    out = io.form_json(decompose(T_avg))
    assert out == {"on": ["x", "y"], "phi": {"x": [1, 1], "y": [-1, 1]}, "tau": {"x": "a", "y": "b"}}


@given(st.builds(Fraction, st.integers(-10**6, 10**6), st.integers(1, 10**6)))
def test_rational_encoding(q):
    assert dump_scalar(q) == [q.numerator, q.denominator]
    assert parse_scalar(dump_scalar(q)) == q
    assert parse_scalar(f"{q.numerator}/{q.denominator}") == q


def test_complex_encoding():
    z = Fraction(1, 2) + 3 * I
    assert parse_scalar(dump_scalar(z), COMPLEX) == z
    assert parse_scalar({"re": 0, "im": 1}, COMPLEX) == I


@pytest.mark.parametrize("raw", [0.5, True, [1, 2, 3]])
def test_bad_scalars(raw):
    with pytest.raises((TypeError, ValueError)):
        parse_scalar(raw)


@pytest.mark.parametrize(
    "text",
    [
        "{not json",
        '{"subspaces": {"A": {"space": "nowhere", "basis": "full"}}}',
        '{"spaces": {"Z": {"points": ["a"], "weight": [0]}}}',
    ],
)
def test_bad_documents(text):
    with pytest.raises(LabError):
        io.loads(text)


def test_picking_needs_a_name_when_ambiguous():
    doc = io.load(DATA)
    with pytest.raises(LabError):
        doc.map(None)
    with pytest.raises(LabError):
        doc.subspace("missing")


def test_pretty_collapses_short_lists():
    text = io.pretty({"m": [[1, 2], [3, 4]], "v": [1, 2]})
    assert '"v": [1, 2]' in text
    assert '"m": [[1, 2], [3, 4]]' in text
    assert json.loads(text) == {"m": [[1, 2], [3, 4]], "v": [1, 2]}
