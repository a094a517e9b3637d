"""Exact rational linear programming.

A dense two-phase simplex with Bland's rule over :class:`fractions.Fraction`.
Every result carries a dual certificate so callers can re-check answers
exactly instead of trusting the pivoting:

* optimal: primal ``x`` and duals with ``A^T y <= c`` (``= c`` on free
  columns) and ``b . y == fun``;
* infeasible: a Farkas vector ``y`` with ``A^T y <= 0`` and ``b . y > 0``;
* unbounded: a ray ``d`` with ``A_eq d = 0``, ``A_ub d <= 0`` and ``c . d < 0``.

The interface loosely follows ``scipy.optimize.linprog`` (minimisation,
``A_ub x <= b_ub``, ``A_eq x = b_eq``) but variables are either all free or
all nonnegative, selected with ``free``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)
MAX_PIVOTS = 100_000


@dataclass
class LPResult:
    status: str
    x: list | None = None
    fun: Fraction | None = None
    y_ub: list = field(default_factory=list)
    y_eq: list = field(default_factory=list)
    ray: list | None = None

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"

    @property
    def feasible(self) -> bool:
        return self.status != "infeasible"


class _Tableau:
    """Standard form min c.X, A X = b, X >= 0 with artificial start basis."""

    def __init__(self, a, b, c):
        m = len(a)
        n = len(c)
        self.m, self.n = m, n
        self.rows = []
        for i in range(m):
            row = list(a[i])
            rhs = b[i]
            if rhs < 0:
                row = [-v for v in row]
                rhs = -rhs
            art = [_ZERO] * m
            art[i] = _ONE
            self.rows.append(row + art + [rhs])
        self.flip = [(-_ONE if b[i] < 0 else _ONE) for i in range(m)]
        self.basis = [n + i for i in range(m)]
        self.cost = list(c) + [_ZERO] * m

    def _reduced(self, cost):
        width = self.n + self.m
        red = list(cost) + [_ZERO]
        for i, bi in enumerate(self.basis):
            cb = cost[bi]
            if cb:
                row = self.rows[i]
                for j in range(width + 1):
                    v = row[j]
                    if v:
                        red[j] -= cb * v
        return red

    def _pivot(self, r, col, red):
        prow = self.rows[r]
        piv = prow[col]
        if piv != 1:
            inv = 1 / piv
            prow = [v * inv if v else v for v in prow]
            self.rows[r] = prow
        nz = [j for j, v in enumerate(prow) if v]
        for i, row in enumerate(self.rows):
            if i != r:
                f = row[col]
                if f:
                    for j in nz:
                        row[j] -= f * prow[j]
        f = red[col]
        if f:
            for j in nz:
                red[j] -= f * prow[j]
        self.basis[r] = col

    def _run(self, red, allowed):
        width = self.n + self.m
        for _ in range(MAX_PIVOTS):
            col = next((j for j in range(width) if allowed[j] and red[j] < 0), None)
            if col is None:
                return "optimal", None
            best = None
            for i, row in enumerate(self.rows):
                v = row[col]
                if v > 0:
                    ratio = row[width] / v
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded", col
            self._pivot(best[1], col, red)
        raise RuntimeError("simplex pivot limit exceeded")

    def solution(self):
        width = self.n + self.m
        x = [_ZERO] * width
        for i, bi in enumerate(self.basis):
            x[bi] = self.rows[i][width]
        return x

    def duals(self, red, cost):
        # artificial column i is the unit vector of flipped row i
        return [(cost[self.n + i] - red[self.n + i]) * self.flip[i] for i in range(self.m)]

    def solve(self):
        m, n = self.m, self.n
        width = n + m
        phase1 = [_ZERO] * n + [_ONE] * m
        red = self._reduced(phase1)
        self._run(red, [True] * width)
        if -red[width] > 0:
            return "infeasible", None, self.duals(red, phase1), None
        # drive zero-level artificials out of the basis where possible
        for i in range(m):
            if self.basis[i] >= n:
                col = next((j for j in range(n) if self.rows[i][j] != 0), None)
                if col is not None:
                    self._pivot(i, col, red)
        red = self._reduced(self.cost)
        allowed = [True] * n + [False] * m
        status, col = self._run(red, allowed)
        if status == "unbounded":
            ray = [_ZERO] * width
            ray[col] = _ONE
            for i, bi in enumerate(self.basis):
                ray[bi] = -self.rows[i][col]
            return "unbounded", None, None, ray[:n]
        return "optimal", self.solution()[:n], self.duals(red, self.cost), None


def linprog(c, A_ub=None, b_ub=None, A_eq=None, b_eq=None, free=False) -> LPResult:
    """Minimise ``c . x`` subject to ``A_ub x <= b_ub`` and ``A_eq x = b_eq``.

    ``free=True`` leaves every variable unrestricted in sign, otherwise ``x >= 0``.
    """
    c = [Fraction(v) for v in c]
    nv = len(c)
    A_ub = [[Fraction(v) for v in row] for row in (A_ub or [])]
    A_eq = [[Fraction(v) for v in row] for row in (A_eq or [])]
    b_ub = [Fraction(v) for v in (b_ub or [])]
    b_eq = [Fraction(v) for v in (b_eq or [])]
    mu = len(A_ub)

    def expand(row):
        return [v for x in row for v in (x, -x)] if free else list(row)

    ns = len(expand([_ZERO] * nv))
    a_std, b_std = [], []
    for i, row in enumerate(A_ub):
        slack = [_ZERO] * mu
        slack[i] = _ONE
        a_std.append(expand(row) + slack)
        b_std.append(b_ub[i])
    for i, row in enumerate(A_eq):
        a_std.append(expand(row) + [_ZERO] * mu)
        b_std.append(b_eq[i])
    c_std = expand(c) + [_ZERO] * mu

    if not a_std:
        # no constraints: optimum 0 at x = 0 unless some cost is negative
        if free and any(c):
            return LPResult("unbounded", ray=[-v for v in c])
        if not free and any(v < 0 for v in c):
            j = next(j for j, v in enumerate(c) if v < 0)
            ray = [_ZERO] * nv
            ray[j] = _ONE
            return LPResult("unbounded", ray=ray)
        return LPResult("optimal", x=[_ZERO] * nv, fun=_ZERO)

    status, xs, y, ray = _Tableau(a_std, b_std, c_std).solve()

    def collapse(vec):
        if free:
            return [vec[2 * j] - vec[2 * j + 1] for j in range(nv)]
        return list(vec[:nv])

    if status == "infeasible":
        return LPResult("infeasible", y_ub=y[:mu], y_eq=y[mu:])
    if status == "unbounded":
        return LPResult("unbounded", ray=collapse(ray[:ns]))
    x = collapse(xs[:ns])
    fun = sum((ci * xi for ci, xi in zip(c, x)), _ZERO)
    return LPResult("optimal", x=x, fun=fun, y_ub=y[:mu], y_eq=y[mu:])


def check_certificate(res: LPResult, c, A_ub=None, b_ub=None, A_eq=None, b_eq=None, free=False) -> bool:
    """Re-verify an :class:`LPResult` exactly against the problem data."""
    A_ub, b_ub = A_ub or [], b_ub or []
    A_eq, b_eq = A_eq or [], b_eq or []
    nv = len(c)

    def col_dot(j, yu, ye):
        return sum((A_ub[i][j] * yu[i] for i in range(len(A_ub))), _ZERO) + sum(
            (A_eq[i][j] * ye[i] for i in range(len(A_eq))), _ZERO
        )

    if res.status == "optimal":
        x = res.x
        for row, rhs in zip(A_ub, b_ub):
            if sum((a * v for a, v in zip(row, x)), _ZERO) > rhs:
                return False
        for row, rhs in zip(A_eq, b_eq):
            if sum((a * v for a, v in zip(row, x)), _ZERO) != rhs:
                return False
        if not free and any(v < 0 for v in x):
            return False
        if any(v > 0 for v in res.y_ub):
            return False
        for j in range(nv):
            s = col_dot(j, res.y_ub, res.y_eq)
            if (free and s != c[j]) or (not free and s > c[j]):
                return False
        dual_obj = sum((b * y for b, y in zip(b_ub, res.y_ub)), _ZERO) + sum(
            (b * y for b, y in zip(b_eq, res.y_eq)), _ZERO
        )
        return dual_obj == res.fun
    if res.status == "infeasible":
        if any(v > 0 for v in res.y_ub):
            return False
        for j in range(nv):
            s = col_dot(j, res.y_ub, res.y_eq)
            if (free and s != 0) or (not free and s > 0):
                return False
        dual_obj = sum((b * y for b, y in zip(b_ub, res.y_ub)), _ZERO) + sum(
            (b * y for b, y in zip(b_eq, res.y_eq)), _ZERO
        )
        return dual_obj > 0
    d = res.ray
    if not free and any(v < 0 for v in d):
        return False
    for row in A_ub:
        if sum((a * v for a, v in zip(row, d)), _ZERO) > 0:
            return False
    for row in A_eq:
        if sum((a * v for a, v in zip(row, d)), _ZERO) != 0:
            return False
    return sum((a * v for a, v in zip(c, d)), _ZERO) < 0
