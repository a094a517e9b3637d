"""JSON instance format.

A document holds named spaces, subspaces, maps and composition forms::

    {
      "spaces": {"Z1": {"points": ["a", "b"], "weight": {"a": [1, 1], "b": [2, 1]},
                        "field": "real"}},
      "subspaces": {"A": {"space": "Z1", "basis": [[[1, 1], [0, 1]]]}},
      "maps": {"T": {"domain": "A", "codomain": "A", "matrix": [[[1, 1]]]}},
      "forms": {"F": {"map": "T", "on": ["a"], "phi": {"a": [1, 1]}, "tau": {"a": "a"}}}
    }

Real scalars are [numerator, denominator]; complex scalars are a pair of
those, [[re_num, re_den], [im_num, im_den]]. Readers also accept plain
integers and "p/q" strings.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from isolab.errors import LabError
from isolab.isometry import CompositionForm
from isolab.maps import LinearMap
from isolab.scalars import ScalarField, dump_scalar, parse_scalar
from isolab.space import Subspace, WeightedSpace

__all__ = ["Document", "dump_scalar", "load", "loads", "dump", "dumps"]


@dataclass
class Document:
    spaces: dict = field(default_factory=dict)
    subspaces: dict = field(default_factory=dict)
    maps: dict = field(default_factory=dict)
    forms: dict = field(default_factory=dict)
    meta: dict = field(default_factory=dict)

    def subspace(self, name: str | None) -> Subspace:
        return self._pick(self.subspaces, name, "subspace")

    def map(self, name: str | None) -> LinearMap:
        return self._pick(self.maps, name, "map")

    def form(self, name: str | None) -> CompositionForm:
        """Forms are stored as (map name, form) pairs."""
        return self._pick(self.forms, name, "form")[1]

    @staticmethod
    def _pick(table, name, what):
        if name is None:
            if len(table) != 1:
                raise LabError(f"document has {len(table)} {what}s; name one explicitly")
            return next(iter(table.values()))
        try:
            return table[name]
        except KeyError:
            raise LabError(f"no {what} named {name!r}") from None

    def name_of(self, obj) -> str:
        for table in (self.spaces, self.subspaces, self.maps):
            for k, v in table.items():
                if v is obj or v == obj:
                    return k
        raise LabError("object is not part of the document")


def _point(space: WeightedSpace, raw):
    for z in space.points:
        if z == raw or str(z) == str(raw):
            return z
    raise LabError(f"unknown point {raw!r}")


def from_json(data: dict) -> Document:
    doc = Document(meta={k: v for k, v in data.items() if k not in ("spaces", "subspaces", "maps", "forms")})
    try:
        for name, s in data.get("spaces", {}).items():
            fld = ScalarField(s.get("field", "real"))
            pts = tuple(s["points"])
            w = s.get("weight")
            if w is None:
                weight = (1,) * len(pts)
            elif isinstance(w, dict):
                weight = tuple(parse_scalar(w[str(z)], fld) for z in pts)
            else:
                weight = tuple(parse_scalar(v, fld) for v in w)
            doc.spaces[name] = WeightedSpace(pts, weight, fld)
        for name, s in data.get("subspaces", {}).items():
            space = doc.spaces[s["space"]]
            if s.get("basis") in (None, "full"):
                doc.subspaces[name] = space.full()
            else:
                basis = [[parse_scalar(v, space.field) for v in b] for b in s["basis"]]
                doc.subspaces[name] = Subspace(space, tuple(space.func(b) for b in basis))
        for name, m in data.get("maps", {}).items():
            A1, A2 = doc.subspaces[m["domain"]], doc.subspaces[m["codomain"]]
            if "values" in m:
                K = [[parse_scalar(v, A2.field) for v in row] for row in m["values"]]
                doc.maps[name] = LinearMap.from_values(A1, A2, K)
            else:
                M = [[parse_scalar(v, A2.field) for v in row] for row in m["matrix"]]
                doc.maps[name] = LinearMap(A1, A2, tuple(tuple(r) for r in M))
        for name, f in data.get("forms", {}).items():
            T = doc.maps[f["map"]]
            Z1, Z2 = T.domain.ambient, T.codomain.ambient
            on = tuple(_point(Z2, x) for x in f["on"])
            phi = {_point(Z2, x): parse_scalar(v, Z2.field) for x, v in f["phi"].items()}
            tau = {_point(Z2, x): _point(Z1, y) for x, y in f["tau"].items()}
            doc.forms[name] = (f["map"], CompositionForm(on, phi, tau))
    except KeyError as exc:
        raise LabError(f"missing reference or field {exc}") from None
    return doc


def loads(text: str) -> Document:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LabError(f"invalid JSON: {exc}") from None
    return from_json(data)


def load(path) -> Document:
    return loads(Path(path).read_text(encoding="utf-8"))


def space_json(space: WeightedSpace) -> dict:
    return {
        "points": list(space.points),
        "weight": {str(z): dump_scalar(w) for z, w in zip(space.points, space.weight)},
        "field": space.field.tag,
    }


def form_json(form: CompositionForm, map_name: str | None = None) -> dict:
    out = {
        "on": list(form.on),
        "phi": {str(x): dump_scalar(form.phi[x]) for x in form.on},
        "tau": {str(x): form.tau[x] for x in form.on},
    }
    if map_name is not None:
        out["map"] = map_name
    return out


def to_json(doc: Document) -> dict:
    out = dict(doc.meta)
    space_names = {}
    out["spaces"] = {}
    for name, s in doc.spaces.items():
        out["spaces"][name] = space_json(s)
        space_names[s] = name
    for A in list(doc.subspaces.values()):
        if A.ambient not in space_names:
            name = f"Z{len(space_names) + 1}"
            space_names[A.ambient] = name
            out["spaces"][name] = space_json(A.ambient)
    sub_names = {}
    out["subspaces"] = {}
    for name, A in doc.subspaces.items():
        sub_names[A] = name
        out["subspaces"][name] = {
            "space": space_names[A.ambient],
            "basis": [[dump_scalar(v) for v in b.values] for b in A.basis],
        }
    out["maps"] = {}
    map_names = {}
    for name, T in doc.maps.items():
        map_names[T] = name
        out["maps"][name] = {
            "domain": sub_names[T.domain],
            "codomain": sub_names[T.codomain],
            "matrix": [[dump_scalar(v) for v in row] for row in T.matrix],
        }
    if doc.forms:
        out["forms"] = {}
        for name, (map_name, form) in doc.forms.items():
            out["forms"][name] = form_json(form, map_name)
    return out


_FLAT_LIST = re.compile(r"\[\s*([^\[\]{}]*?)\s*\]")


def pretty(obj) -> str:
    """Indented JSON with short scalar lists (and lists of them) on one line."""
    text = json.dumps(obj, indent=2, default=str)
    for _ in range(2):
        text = _FLAT_LIST.sub(lambda m: "[" + re.sub(r"\s*\n\s*", " ", m.group(1)) + "]", text)
        text = re.sub(r"\[\s*((?:\[[^\[\]]*\],?\s*)+)\]", lambda m: "[" + re.sub(r"\s*\n\s*", " ", m.group(1)).strip() + "]", text)
    return text


def dumps(doc: Document) -> str:
    return pretty(to_json(doc))


def dump(doc: Document, path) -> None:
    Path(path).write_text(dumps(doc) + "\n", encoding="utf-8")
