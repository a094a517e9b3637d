"""Deterministic random instances.

Every draw goes through one ``random.Random(seed)`` so the same seed always
yields the same instance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from isolab.errors import LabError
from isolab.isometry import CompositionForm, weighted_composition_operator
from isolab.maps import LinearMap
from isolab.scalars import REAL, ScalarField
from isolab.space import Subspace, WeightedSpace

KINDS = ("random_subspace", "full_space_pair", "isometry_pair", "onto_pair", "composable_pair")


@dataclass(frozen=True)
class Scale:
    max_points: int = 8
    max_dim: int = 4
    coefficient_height: int = 8

    def __post_init__(self):
        if not 1 <= self.max_points <= 8:
            raise LabError("max_points must lie in [1, 8]")
        if not 1 <= self.max_dim <= 4:
            raise LabError("max_dim must lie in [1, 4]")
        if not 1 <= self.coefficient_height <= 8:
            raise LabError("coefficient_height must lie in [1, 8]")


SMALL = Scale(5, 3, 3)


@dataclass
class Instance:
    seed: int
    scale: Scale
    kind: str
    spaces: list = field(default_factory=list)
    subspaces: list = field(default_factory=list)
    maps: list = field(default_factory=list)
    forms: list = field(default_factory=list)

    def check(self) -> None:
        spaces = set(self.spaces)
        for A in self.subspaces:
            if A.ambient not in spaces:
                raise LabError("subspace over an undeclared space")
        subs = set(self.subspaces)
        for T in self.maps:
            if T.domain not in subs or T.codomain not in subs:
                raise LabError("map between undeclared subspaces")

    def to_document(self):
        from isolab.io import Document

        doc = Document(meta={"seed": self.seed, "kind": self.kind})
        for i, s in enumerate(self.spaces, 1):
            doc.spaces[f"Z{i}"] = s
        for i, A in enumerate(self.subspaces, 1):
            doc.subspaces[f"A{i}"] = A
        for i, T in enumerate(self.maps, 1):
            doc.maps[f"T{i}"] = T
        for i, form in enumerate(self.forms, 1):
            if form is not None:
                doc.forms[f"F{i}"] = (f"T{i}", form)
        return doc


def _rational(rng: random.Random, h: int, nonzero: bool = False) -> Fraction:
    while True:
        v = Fraction(rng.randint(-h, h), rng.randint(1, h))
        if v or not nonzero:
            return v


def _weight(rng: random.Random, h: int) -> Fraction:
    # mostly 1 so that many instances carry the constant function
    if rng.random() < 0.5:
        return Fraction(1)
    return _rational(rng, h, nonzero=True)


def random_space(rng: random.Random, n: int, scale: Scale, prefix: str = "z", unit: bool = False) -> WeightedSpace:
    points = tuple(f"{prefix}{i}" for i in range(n))
    weight = tuple(Fraction(1) if unit else _weight(rng, scale.coefficient_height) for _ in range(n))
    return WeightedSpace(points, weight, REAL)


def random_subspace(rng: random.Random, Z: WeightedSpace, d: int, scale: Scale) -> Subspace:
    """A rank-d subspace; basis redrawn until independent.

    Entries are small integers most of the time so that repeated or opposite
    evaluation functionals (nontrivial classes) show up regularly.
    """
    h = scale.coefficient_height
    while True:
        basis = []
        for _ in range(d):
            if rng.random() < 0.6:
                basis.append(tuple(Fraction(rng.randint(-2, 2)) for _ in range(Z.n)))
            else:
                basis.append(tuple(_rational(rng, h) for _ in range(Z.n)))
        try:
            return Z.sub(*basis)
        except LabError:
            continue


def _surjection(rng: random.Random, U, targets) -> dict:
    U = list(U)
    rng.shuffle(U)
    tau = {x: y for x, y in zip(U, targets)}
    for x in U[len(targets):]:
        tau[x] = rng.choice(targets)
    return tau


def _signs(rng: random.Random, points, field: ScalarField = REAL) -> dict:
    return {x: rng.choice(field.signs()) for x in points}


def _extra_rows(rng: random.Random, A1: Subspace, Z2: WeightedSpace, extra, scale: Scale) -> dict:
    """Rows for codomain points off the form's set, each of pulled-back norm <= 1.

    Row x is sum_z c_z Delta(1, z) / p2(x) with sum |c_z| <= 1, half of the time
    splitting mass evenly between two points (a non-extreme pullback of norm 1).
    """
    Z1 = A1.ambient
    rows = {}
    for x in extra:
        c = [Fraction(0)] * Z1.n
        if Z1.n >= 2 and rng.random() < 0.5:
            i, j = rng.sample(range(Z1.n), 2)
            c[i] = Fraction(rng.choice((1, -1)), 2)
            c[j] = Fraction(rng.choice((1, -1)), 2)
        else:
            budget = Fraction(rng.randint(0, scale.coefficient_height), scale.coefficient_height)
            for i in range(Z1.n):
                c[i] = budget * Fraction(rng.randint(-2, 2), 2 * Z1.n)
        rows[x] = [c[i] * Z1.weight[i] / Z2.p(x) for i in range(Z1.n)]
    return rows


def composition_map(A1: Subspace, A2: Subspace, form: CompositionForm, rows=None) -> LinearMap:
    """The weighted composition operator of ``form`` plus optional extra rows."""
    T = weighted_composition_operator(A1, A2, form).map
    if not rows:
        return T
    Z1, Z2 = A1.ambient, A2.ambient
    K = [[Fraction(0)] * Z1.n for _ in range(Z2.n)]
    for x in form.on:
        y = form.tau[x]
        K[Z2.index(x)][Z1.index(y)] = form.phi[x] * Z1.p(y) / Z2.p(x)
    for x, row in rows.items():
        K[Z2.index(x)] = list(row)
    return LinearMap.from_values(A1, A2, K)


def _pair(rng: random.Random, scale: Scale, A1: Subspace, n2: int, onto: bool, prefix: str = "x") -> tuple:
    Z1 = A1.ambient
    Z2 = random_space(rng, n2, scale, prefix=prefix)
    A2 = Z2.full()
    if onto:
        U = Z2.points
    else:
        k = rng.randint(Z1.n, n2)
        U = tuple(sorted(rng.sample(Z2.points, k), key=Z2.points.index))
    tau = _surjection(rng, U, list(Z1.points))
    form = CompositionForm(U, _signs(rng, U), tau)
    rows = {} if onto else _extra_rows(rng, A1, Z2, [x for x in Z2.points if x not in U], scale)
    T = composition_map(A1, A2, form, rows)
    return Z2, A2, T, form


def gen_instance(seed: int, scale: Scale = Scale(), kind: str = "random_subspace") -> Instance:
    if kind not in KINDS:
        raise LabError(f"unknown instance kind {kind!r}; expected one of {', '.join(KINDS)}")
    if not isinstance(scale, Scale):
        raise LabError("scale must be a Scale record")
    rng = random.Random(f"{kind}:{seed}")
    inst = Instance(seed, scale, kind)
    m = scale.max_points

    if kind == "random_subspace":
        n = rng.randint(1, m)
        Z = random_space(rng, n, scale)
        A = random_subspace(rng, Z, rng.randint(1, min(n, scale.max_dim)), scale)
        inst.spaces, inst.subspaces = [Z], [A]

    elif kind == "full_space_pair":
        # distinct point names keep the map from being an identity
        n1 = rng.randint(1, m)
        Z1 = random_space(rng, n1, scale, prefix="a")
        A1 = Z1.full()
        Z2, A2, T, form = _pair(rng, scale, A1, rng.randint(n1, m), onto=False)
        inst.spaces, inst.subspaces, inst.maps, inst.forms = [Z1, Z2], [A1, A2], [T], [form]

    elif kind == "isometry_pair":
        n1 = rng.randint(1, m)
        Z1 = random_space(rng, n1, scale, prefix="a")
        A1 = random_subspace(rng, Z1, rng.randint(1, min(n1, scale.max_dim)), scale)
        Z2, A2, T, form = _pair(rng, scale, A1, rng.randint(n1, m), onto=False)
        inst.spaces, inst.subspaces, inst.maps, inst.forms = [Z1, Z2], [A1, A2], [T], [form]

    elif kind == "onto_pair":
        n = rng.randint(1, m)
        Z1 = random_space(rng, n, scale, prefix="a")
        A1 = Z1.full()
        Z2, A2, T, form = _pair(rng, scale, A1, n, onto=True)
        inst.spaces, inst.subspaces, inst.maps, inst.forms = [Z1, Z2], [A1, A2], [T], [form]

    else:  # composable_pair: A1 -> A2 -> A3, all full
        n1 = rng.randint(1, max(1, m - 2))
        Z1 = random_space(rng, n1, scale, prefix="a")
        A1 = Z1.full()
        Z2, A2, T1, f1 = _pair(rng, scale, A1, rng.randint(n1, max(n1, m - 1)), onto=False)
        Z3, A3, T2, f2 = _pair(rng, scale, A2, rng.randint(Z2.n, m), onto=False, prefix="y")
        inst.spaces = [Z1, Z2, Z3]
        inst.subspaces = [A1, A2, A3]
        inst.maps, inst.forms = [T1, T2], [f1, f2]

    inst.check()
    return inst
