"""Brute-force oracles that share no code path with the LP solver.

Everything is done by exact vertex enumeration over rationals: pick d
constraints, solve the square system, keep the feasible solutions. Only
meant for desk-scale instances (n <= 5, d <= 3 or so).

The primal ball of a real subspace A, in basis coordinates, is
P = {c : -1 <= g_z . c <= 1 for every z}. Its facets correspond to the
vertices of the dual ball, which is how extremality is decided here.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from isolab import linalg
from isolab.errors import LabError
from isolab.space import Subspace


def _vec(v) -> tuple:
    return tuple(Fraction(x) for x in v)


def _dot(a, b):
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def enumerate_vertices(ineqs, eqs=(), dim: int | None = None) -> list:
    """Vertices of {x : a.x <= b for (a, b) in ineqs, e.x = h for (e, h) in eqs}.

    Returns the distinct vertices in discovery order. The polytope is assumed
    bounded; unbounded inputs just yield whatever vertices exist.
    """
    ineqs = [(_vec(a), Fraction(b)) for a, b in ineqs]
    eqs = [(_vec(a), Fraction(b)) for a, b in eqs]
    if dim is None:
        dim = len((ineqs or eqs)[0][0])
    # parametrize the affine hull of the equalities: x = x0 + N y
    if eqs:
        x0 = linalg.solve([list(a) for a, _ in eqs], [b for _, b in eqs])
        if x0 is None:
            return []
        x0 = _vec(x0)
        N = linalg.nullspace([list(a) for a, _ in eqs], dim)
    else:
        x0 = (Fraction(0),) * dim
        N = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    r = len(N)

    def lift(y):
        return tuple(x0[k] + sum((y[j] * N[j][k] for j in range(r)), Fraction(0)) for k in range(dim))

    reduced = [([_dot(a, n) for n in N], b - _dot(a, x0)) for a, b in ineqs]
    if r == 0:
        return [x0] if all(b >= 0 for _, b in reduced) else []
    seen, out = set(), []
    for combo in itertools.combinations(range(len(reduced)), r):
        M = [reduced[i][0] for i in combo]
        if linalg.rank(M) < r:
            continue
        y = linalg.solve(M, [reduced[i][1] for i in combo])
        if all(_dot(a, y) <= b for a, b in reduced):
            x = lift(y)
            if x not in seen:
                seen.add(x)
                out.append(x)
    return out


def _affine_dim(points) -> int:
    if not points:
        return -1
    base = points[0]
    return linalg.rank([[a - b for a, b in zip(p, base)] for p in points[1:]]) if len(points) > 1 else 0


def _generators(A: Subspace) -> list:
    if not A.field.is_real:
        raise LabError("oracles work in the real field only")
    return [_vec(g) for g in A.generators]


def primal_vertices(A: Subspace) -> list:
    """Vertices of the unit ball of A in basis coordinates."""
    gens = [g for g in _generators(A) if any(g)]
    ineqs = [(g, 1) for g in gens] + [(tuple(-x for x in g), 1) for g in gens]
    return enumerate_vertices(ineqs, dim=A.dim)


def dual_norm(A: Subspace, coords) -> Fraction:
    """max |l . v| over the primal vertices."""
    coords = _vec(coords)
    return max(abs(_dot(coords, v)) for v in primal_vertices(A))


def dual_vertices(A: Subspace, verts=None) -> set:
    """Vertices of the dual ball, as coordinate tuples.

    Each candidate is a signed generator; it is a vertex iff the primal
    vertices it supports span a facet (affine dimension d - 1).
    """
    verts = primal_vertices(A) if verts is None else verts
    out = set()
    for g in _generators(A):
        if not any(g):
            continue
        for s in (1, -1):
            ell = tuple(s * x for x in g)
            touching = [v for v in verts if _dot(ell, v) == 1]
            if _affine_dim(touching) == A.dim - 1:
                out.add(ell)
    return out


def is_extreme(A: Subspace, coords) -> bool:
    return _vec(coords) in dual_vertices(A)


def dual_ball_constraints(A: Subspace, verts=None) -> list:
    """H-representation of the dual ball: l . v <= 1 for every primal vertex v."""
    verts = primal_vertices(A) if verts is None else verts
    return [(v, 1) for v in verts]


def face_vertices(A: Subspace, equalities, verts=None) -> list:
    """Vertices of the dual-ball face cut out by l . c_i = h_i."""
    H = dual_ball_constraints(A, verts)
    return enumerate_vertices(H, [(_vec(c), h) for c, h in equalities], dim=A.dim)


def sigma_vertices(A: Subspace, family_coords, norms) -> set:
    """ex Sigma(G) as the union of vertex sets of every sign-pattern face."""
    verts = primal_vertices(A)
    out = set()
    k = len(family_coords)
    for pattern in itertools.product((1, -1), repeat=k):
        eqs = [(c, s * nf) for c, s, nf in zip(family_coords, pattern, norms)]
        out.update(face_vertices(A, eqs, verts))
    return out


def is_boundary(A: Subspace, Y) -> bool:
    """Y is a boundary iff the ball cut out by Y alone equals the full ball."""
    idx = [A.ambient.index(y) for y in Y]
    gens = _generators(A)
    sub = [gens[i] for i in idx if any(gens[i])]
    if not sub or linalg.rank([list(g) for g in sub]) < A.dim:
        return False
    ineqs = [(g, 1) for g in sub] + [(tuple(-x for x in g), 1) for g in sub]
    return all(abs(_dot(g, v)) <= 1 for v in enumerate_vertices(ineqs, dim=A.dim) for g in gens)


def sim_equiv(A: Subspace, x, y) -> bool:
    """|g_x . c| == |g_y . c| on a grid of coordinate vectors."""
    gx, gy = A.generators[A.ambient.index(x)], A.generators[A.ambient.index(y)]
    grid = range(-3, 4)
    for c in itertools.product(grid, repeat=A.dim):
        if abs(_dot(gx, c)) != abs(_dot(gy, c)):
            return False
    return True


def m_set_identity(A: Subspace) -> tuple:
    ext = dual_vertices(A)
    return tuple(z for z, g in zip(A.points, A.generators) if _vec(g) in ext)
