"""Greedy counterexample minimization.

Candidates are tried in a fixed order: drop a codomain point, then a domain
point, then a domain basis vector. A candidate is kept when the suite
predicate still fails on it; instances that no longer type-check or no
longer meet the hypotheses count as non-failing and are discarded.
"""

from __future__ import annotations

from dataclasses import replace
from typing import Callable, Iterator

from isolab.errors import LabError
from isolab.isometry import CompositionForm
from isolab.maps import LinearMap
from isolab.space import Subspace, WeightedSpace

from isolab.harness.generate import Instance


def instance_size(inst: Instance) -> tuple:
    """(total points, total basis vectors): the measure shrinking decreases."""
    return (sum(s.n for s in inst.spaces), sum(A.dim for A in inst.subspaces))


def _drop_point(Z: WeightedSpace, z) -> WeightedSpace:
    keep = [i for i, p in enumerate(Z.points) if p != z]
    return WeightedSpace(tuple(Z.points[i] for i in keep), tuple(Z.weight[i] for i in keep), Z.field)


def _restrict(A: Subspace, Z: WeightedSpace, greedy: bool) -> tuple:
    """Restrict A's basis to Z; returns (subspace, kept basis indices).

    With ``greedy`` dependent vectors are dropped; otherwise dependence fails.
    """
    idx = [A.ambient.index(z) for z in Z.points]
    vecs = [Z.func([b.values[i] for i in idx]) for b in A.basis]
    if not greedy:
        return Subspace(Z, tuple(vecs)), list(range(len(vecs)))
    kept, chosen = [], []
    for k, v in enumerate(vecs):
        try:
            Subspace(Z, tuple(chosen + [v]))
        except LabError:
            continue
        chosen.append(v)
        kept.append(k)
    if not chosen:
        raise LabError("nothing left")
    return Subspace(Z, tuple(chosen)), kept


def _restrict_form(form, keep_on=None, drop_target=None):
    if form is None:
        return None
    on = [x for x in form.on if (keep_on is None or x in keep_on) and form.tau[x] != drop_target]
    return CompositionForm(tuple(on), {x: form.phi[x] for x in on}, {x: form.tau[x] for x in on})


def _rebuild(inst: Instance, old, new, maps, forms) -> Instance:
    spaces = []
    for s in inst.spaces:
        s2 = new.ambient if s == old.ambient else s
        if s2 not in spaces:
            spaces.append(s2)
    subs = [new if A == old else A for A in inst.subspaces]
    out = replace(inst, spaces=spaces, subspaces=subs, maps=maps, forms=forms)
    out.check()
    return out


def drop_codomain_point(inst: Instance, x) -> Instance:
    T = inst.maps[-1]
    A2 = T.codomain
    Z2 = _drop_point(A2.ambient, x)
    B, _ = _restrict(A2, Z2, greedy=True)
    cols = []
    for b in T.domain.basis:
        img = T.apply(b)
        cols.append(B.coords(Z2.func([img[z] for z in Z2.points])))
    T2 = LinearMap(T.domain, B, tuple(zip(*cols)))
    maps = inst.maps[:-1] + [T2]
    forms = list(inst.forms)
    if forms:
        forms[-1] = _restrict_form(forms[-1], keep_on=set(Z2.points))
    return _rebuild(inst, A2, B, maps, forms)


def drop_domain_point(inst: Instance, y) -> Instance:
    A1 = inst.maps[0].domain if inst.maps else inst.subspaces[0]
    Z1 = _drop_point(A1.ambient, y)
    if not inst.maps:
        B, _ = _restrict(A1, Z1, greedy=True)
        return _rebuild(inst, A1, B, [], list(inst.forms))
    # the map acts on coordinates, so it survives when restriction stays injective
    B, _ = _restrict(A1, Z1, greedy=False)
    T = inst.maps[0]
    maps = [LinearMap(B, T.codomain, T.matrix)] + inst.maps[1:]
    forms = list(inst.forms)
    if forms:
        forms[0] = _restrict_form(forms[0], drop_target=y)
    return _rebuild(inst, A1, B, maps, forms)


def drop_basis_vector(inst: Instance, k: int) -> Instance:
    A1 = inst.maps[0].domain if inst.maps else inst.subspaces[0]
    if A1.dim < 2:
        raise LabError("cannot drop the last basis vector")
    B = Subspace(A1.ambient, tuple(b for i, b in enumerate(A1.basis) if i != k))
    maps = list(inst.maps)
    if maps:
        T = maps[0]
        maps[0] = LinearMap(B, T.codomain, tuple(tuple(v for j, v in enumerate(row) if j != k) for row in T.matrix))
    return _rebuild(inst, A1, B, maps, list(inst.forms))


def candidates(inst: Instance) -> Iterator[Instance]:
    moves = []
    if inst.maps:
        moves += [(drop_codomain_point, x) for x in inst.maps[-1].codomain.points]
        A1 = inst.maps[0].domain
    else:
        A1 = inst.subspaces[0]
    moves += [(drop_domain_point, y) for y in A1.points]
    moves += [(drop_basis_vector, k) for k in range(A1.dim)]
    for move, arg in moves:
        try:
            yield move(inst, arg)
        except (LabError, ZeroDivisionError, ValueError):
            continue


def shrink_instance(inst: Instance, still_fails: Callable[[Instance], bool], max_steps: int = 200) -> Instance:
    """Greedy descent: restart from the first smaller candidate that still fails."""
    current = inst
    for _ in range(max_steps):
        for cand in candidates(current):
            try:
                failing = still_fails(cand)
            except Exception:
                failing = False
            if failing:
                current = cand
                break
        else:
            return current
    return current
