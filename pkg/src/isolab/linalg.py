"""Exact Gaussian elimination over Fraction / GaussianRational entries.

Matrices are lists of rows. Nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction


def zeros(m: int, n: int) -> list[list]:
    return [[Fraction(0)] * n for _ in range(m)]


def identity(n: int) -> list[list]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(a: list[list]) -> list[list]:
    return [list(col) for col in zip(*a)] if a else []


def matmul(a: list[list], b: list[list]) -> list[list]:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matvec(a: list[list], v) -> list:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def dot(u, v):
    return sum((x * y for x, y in zip(u, v)), Fraction(0))


def rref(a: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(row) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: list[list]) -> int:
    if not a or not a[0]:
        return 0
    return len(rref(a)[1])


def solve(a: list[list], b: list):
    """Solve a x = b exactly; return one solution or None when inconsistent.

    Free variables are set to zero.
    """
    n = len(a[0]) if a else 0
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    r, piv = rref(aug)
    if n in piv:
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(piv):
        x[c] = r[i][n]
    return x


def nullspace(a: list[list], ncols: int | None = None) -> list[list]:
    """A basis of {x : a x = 0}."""
    n = ncols if ncols is not None else (len(a[0]) if a else 0)
    if not a:
        return identity(n)
    r, piv = rref(a)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, c in enumerate(piv):
            v[c] = -r[i][f]
        basis.append(v)
    return basis


def inverse(a: list[list]) -> list[list]:
    n = len(a)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    r, piv = rref(aug)
    if piv[:n] != list(range(n)) or len(piv) < n or piv[n - 1] != n - 1:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in r[:n]]
