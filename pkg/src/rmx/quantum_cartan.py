"""Inverse quantum Cartan matrix coefficients, exactly.

The quantum Cartan matrix C(z) has diagonal entries z + 1/z and the ordinary
off-diagonal Cartan entries.  Its inverse expands as sum_{l>=1} ct(l) z^l
with integer matrices ct(l).  Writing C(z) = (z + 1/z) Id + N and matching
the coefficient of z^m in C(z) * Ct(z) = Id gives the integer recurrence

    ct_ij(m+1) = delta_ij * delta_{m,0} - ct_ij(m-1) + sum_{k ~ i} ct_kj(m)

with ct(l) = 0 for l <= 0 (note N_ik = -1 exactly when k ~ i).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from rmx.root_system import CartanData, Vec


@dataclass(frozen=True)
class CTildeTable:
    """Integer table ct_ij(l) for 1 <= l <= L."""

    cd: CartanData
    L: int
    values: tuple[tuple[Vec, ...], ...]  # values[l-1][i-1][j-1]

    def value(self, i: int, j: int, l: int) -> int:
        if l < 1 or l > self.L:
            raise IndexError(f"l={l} outside table range 1..{self.L}")
        return self.values[l - 1][i - 1][j - 1]

    def series(self, i: int, j: int) -> tuple[int, ...]:
        return tuple(self.values[l][i - 1][j - 1] for l in range(self.L))


@lru_cache(maxsize=None)
def ctilde_table(cd: CartanData, L: int | None = None) -> CTildeTable:
    """Compute ct_ij(l) for l up to L (default 2h) by the recurrence."""
    if L is None:
        L = 2 * cd.h
    if L < 1:
        raise ValueError("truncation order must be >= 1")
    n = cd.rank
    nbrs = [cd.neighbors(i) for i in cd.vertices]
    # prev two layers; layer for l <= 0 is zero
    layers: list[list[list[int]]] = []
    prev2 = [[0] * n for _ in range(n)]  # ct(m-1)
    prev1 = [[0] * n for _ in range(n)]  # ct(m), starts as ct(0) = 0
    for m in range(L):
        cur = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                v = -prev2[i][j] + sum(prev1[k - 1][j] for k in nbrs[i])
                if m == 0 and i == j:
                    v += 1
                cur[i][j] = v
        layers.append(cur)
        prev2, prev1 = prev1, cur
    values = tuple(tuple(tuple(row) for row in layer) for layer in layers)
    return CTildeTable(cd=cd, L=L, values=values)


def ctilde(cd: CartanData, i: int, j: int, l: int) -> int:
    """Single coefficient ct_ij(l), using 2h-periodicity for large l."""
    if l < 1:
        raise ValueError("l must be >= 1")
    period = 2 * cd.h
    t = ctilde_table(cd, period)
    return t.value(i, j, (l - 1) % period + 1)


def ctilde_coxeter(cd, Q, xi, i: int, j: int, l: int) -> int:
    """ct_ij(l) through the Coxeter-element formula for a quiver with heights.

    Returns 0 when l + eps_i + eps_j + 1 is odd; otherwise pairs
    tau^((l + xi_i - xi_j - 1)/2) (gamma_i) with the fundamental weight w_j.
    Independent of the choice of (Q, xi).
    """
    if l < 1:
        raise ValueError("l must be >= 1")
    if (l + cd.eps_of(i) + cd.eps_of(j) + 1) % 2 == 1:
        return 0
    k = (l + xi[i - 1] - xi[j - 1] - 1) // 2
    v = _tau_power_gamma(Q, xi, i, k)
    return v[j - 1]


@lru_cache(maxsize=None)
def _tau_power_gamma(Q, xi, i: int, k: int) -> Vec:
    from rmx import ar_quiver as ar

    if k == 0:
        return ar.gamma_vector(Q, i)
    word = ar.coxeter_word(Q, xi)
    prev = _tau_power_gamma(Q, xi, i, k - 1 if k > 0 else k + 1)
    return ar.coxeter_apply(Q.cd, word, prev, 1 if k > 0 else -1)


def rational_inversion_residual(cd: CartanData, L: int, z0):
    """Exact residual of C(z0) * (truncated inverse) against the identity.

    Returns (max_abs_residual, tail_bound) as Fractions; the bound majorizes
    the dropped tail using the 2h-periodicity of the coefficients, so the
    residual must come in under it for a correct table.
    """
    from fractions import Fraction

    z0 = Fraction(z0)
    if not 0 < abs(z0) <= Fraction(1, 4):
        raise ValueError("sample point must satisfy 0 < |z0| <= 1/4")
    if L < 4 * cd.h:
        raise ValueError("need L >= 4h for a useful tail bound")
    n = cd.rank
    t = ctilde_table(cd, L)
    C = [
        [z0 + 1 / z0 if i == j else Fraction(cd.c(i + 1, j + 1))
         for j in range(n)]
        for i in range(n)
    ]
    S = [[Fraction(0)] * n for _ in range(n)]
    zpow = Fraction(1)
    for l in range(1, L + 1):
        zpow *= z0
        layer = t.values[l - 1]
        for i in range(n):
            for j in range(n):
                S[i][j] += layer[i][j] * zpow
    resid = Fraction(0)
    for i in range(n):
        for j in range(n):
            acc = sum((C[i][k] * S[k][j] for k in range(n)), Fraction(0))
            if i == j:
                acc -= 1
            resid = max(resid, abs(acc))
    cmax = max(
        abs(t.values[l][i][j]) for l in range(L) for i in range(n) for j in range(n)
    )
    row_norm = max(
        sum(abs(C[i][k]) for k in range(n)) for i in range(n)
    )
    tail = row_norm * cmax * abs(z0) ** (L + 1) / (1 - abs(z0))
    return resid, tail


def check_ctilde_identities(t: CTildeTable) -> list[str]:
    """Verify the eight structural identities; returns violations (ideally [])."""
    cd = t.cd
    h = cd.h
    if t.L < 2 * h:
        raise ValueError(f"table truncated at {t.L}, need at least 2h = {2 * h}")
    bad: list[str] = []
    n = cd.rank
    autos = _diagram_automorphisms(cd)
    for i in cd.vertices:
        for j in cd.vertices:
            for l in range(1, 2 * h + 1):
                v = t.value(i, j, l)
                if v != t.value(j, i, l):
                    bad.append(f"(1) symmetry fails at ({i},{j},{l})")
                for sigma in autos:
                    if v != t.value(sigma[i - 1], sigma[j - 1], l):
                        bad.append(f"(2) automorphism invariance fails at ({i},{j},{l})")
                if l <= 2 * h - 1 and v != -t.value(i, j, 2 * h - l):
                    bad.append(f"(4) ct(l) = -ct(2h-l) fails at ({i},{j},{l})")
                if 1 <= l <= h - 1 and v != t.value(j, cd.star_of(i), h - l):
                    bad.append(f"(5) ct_ij(l) = ct_(j,i*)(h-l) fails at ({i},{j},{l})")
                if l % h == 0 and v != 0:
                    bad.append(f"(6) ct(kh) = 0 fails at ({i},{j},{l})")
                if 1 <= l <= h - 1 and v < 0:
                    bad.append(f"(7) ct(l) >= 0 on 1..h-1 fails at ({i},{j},{l})")
                if h + 1 <= l <= 2 * h - 1 and v > 0:
                    bad.append(f"(8) ct(l) <= 0 on h+1..2h-1 fails at ({i},{j},{l})")
    # (3) periodicity needs one extra period; recompute a longer table.
    t2 = ctilde_table(cd, 4 * h)
    for i in cd.vertices:
        for j in cd.vertices:
            for l in range(1, 2 * h + 1):
                if t.value(i, j, l) != t2.value(i, j, l + 2 * h):
                    bad.append(f"(3) period 2h fails at ({i},{j},{l})")
    return bad


@lru_cache(maxsize=None)
def _diagram_automorphisms(cd: CartanData) -> tuple[Vec, ...]:
    """All permutations of the vertices preserving the Cartan matrix."""
    from itertools import permutations

    n = cd.rank
    if n > 8:
        raise ValueError("brute-force automorphism search capped at rank 8")
    out = []
    for perm in permutations(range(1, n + 1)):
        if all(
            cd.c(i, j) == cd.c(perm[i - 1], perm[j - 1])
            for i in cd.vertices
            for j in cd.vertices
        ):
            out.append(perm)
    return tuple(out)
