"""Exact linear algebra over the rationals: rank, nullspace, solving.

Matrices are lists of row lists holding ints or Fractions.  Everything here
is small (dozens of rows), so plain fraction Gaussian elimination is plenty.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]


def _rref(rows: list[list[Fraction]], ncols: int):
    """In-place reduced row echelon form; returns the pivot column list."""
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((k for k in range(r, len(rows)) if rows[k][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = Fraction(1, 1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c] != 0:
                f = rows[k][c]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def _as_fractions(mat) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in mat]


def rank(mat, ncols: int | None = None) -> int:
    rows = _as_fractions(mat)
    if not rows:
        return 0
    n = ncols if ncols is not None else len(rows[0])
    return len(_rref(rows, n))


def nullspace(mat, ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel (each vector of length ncols)."""
    rows = _as_fractions(mat)
    pivots = _rref(rows, ncols) if rows else []
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -rows[r][free]
        basis.append(v)
    return basis


def solve(mat, rhs, ncols: int):
    """One solution of mat @ x = rhs, or None if inconsistent."""
    rows = _as_fractions(mat)
    aug = [row + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = _rref(aug, ncols) if aug else []
    for row in aug:
        if all(x == 0 for x in row[:ncols]) and row[ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        x[c] = aug[r][ncols]
    return x


def in_column_space(mat, vec, ncols: int) -> bool:
    """Whether vec lies in the span of the columns of mat (mat has len(vec) rows)."""
    base = rank(mat, ncols)
    aug = [list(row) + [v] for row, v in zip(mat, vec)]
    return rank(aug, ncols + 1) == base


def mat_mul(a, b) -> Matrix:
    if not a or not b:
        return []
    n, m, k = len(a), len(b[0]), len(b)
    return [
        [sum((Fraction(a[i][t]) * Fraction(b[t][j]) for t in range(k)),
             Fraction(0)) for j in range(m)]
        for i in range(n)
    ]
