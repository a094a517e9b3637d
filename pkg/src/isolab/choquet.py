"""Choquet sets of isometries and the families of sets realising ext A*."""

from __future__ import annotations

from dataclasses import dataclass, field

from isolab.dual import extreme_keys, in_conv, is_extreme_functional
from isolab.errors import LabError
from isolab.maps import LinearMap, require_isometry
from isolab.space import FunctionVec, Subspace, suppmax
from isolab.verdict import Verdict


@dataclass
class ChoquetReport:
    m_set: tuple
    generator_images: dict
    is_ch_member: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        from isolab.io import dump_scalar

        extreme = {
            str(z): [dump_scalar(c) for c in self.generator_images[z].coords] for z in self.m_set
        }
        out = {"m_set": list(self.m_set), "extreme_generators": extreme}
        if self.is_ch_member:
            out["ch_members"] = [{"Y": list(Y), "member": v} for Y, v in self.is_ch_member.items()]
        return out


def _as_map(T) -> LinearMap:
    return LinearMap.identity(T) if isinstance(T, Subspace) else T


def m_set(T) -> tuple:
    """Codomain points whose pulled-back evaluation functional is extreme.

    Accepts a subspace as shorthand for its identity map.
    """
    T = _as_map(T)
    require_isometry(T)
    return _m_set(T)


def _m_set(T: LinearMap) -> tuple:
    A1 = T.domain
    return tuple(x for x in T.codomain.points if is_extreme_functional(A1, T.pullback(x)))


def choquet_report(T, queries=()) -> ChoquetReport:
    T = _as_map(T)
    require_isometry(T)
    images = T.pullbacks()
    report = ChoquetReport(_m_set(T), images)
    for Y in queries:
        report.is_ch_member[tuple(Y)] = bool(ch_contains(T, Y))
    return report


def ch_contains(T, Y) -> Verdict:
    """Whether the pullbacks of the evaluation functionals over Y (times all
    unimodular scalars) are exactly the extreme functionals of the domain."""
    T = _as_map(T)
    Y = T.codomain.ambient.subset(Y)
    if not Y:
        raise LabError("Y must be nonempty")
    require_isometry(T)
    target = extreme_keys(T.domain)
    image = {T.pullback(y).key: y for y in Y}
    extra = [y for k, y in image.items() if k not in target]
    if extra:
        return Verdict(False, note=f"non-extreme image at {extra[0]!r}")
    missed = target - set(image)
    if missed:
        return Verdict(False, note=f"{len(missed)} extreme class(es) not hit")
    return Verdict(True)


def prop63_set(A: Subspace) -> tuple:
    """Points whose evaluation functional is extreme in the face {l : l(1) = 1}.

    Needs weight 1 everywhere and the constant function in A. The face is the
    convex hull of the evaluation functionals, so extremality there is plain
    convex-hull exclusion. The answer is checked against :func:`m_set`.
    """
    from isolab.errors import TheoremViolation

    if any(p != 1 for p in A.ambient.weight):
        raise LabError("prop63_set needs the constant weight 1")
    if not A.contains_constants():
        raise LabError("the constant function 1 is not in the subspace")
    gens = {z: A.generator(z) for z in A.points}
    out = []
    for z, g in gens.items():
        others = [h for h in gens.values() if h.coords != g.coords]
        if not in_conv(g, others):
            out.append(z)
    out = tuple(out)
    if set(out) != set(m_set(A)):
        raise TheoremViolation(f"face extremality gives {out}, Choquet set is {m_set(A)}")
    return out


def boundary_meets_suppmax(A: Subspace, f: FunctionVec, Y) -> bool:
    """Y meets suppmax(f); must be True whenever Y realises ext A*."""
    if not ch_contains(A, Y):
        raise LabError("Y is not a member of Ch(A)")
    return bool(set(suppmax(f, A)) & set(Y))
