"""Combinatorics of Schur-Weyl families: the Ext quiver on repetition-quiver
vertices, type-A subquiver families, Kostant partitions and graded nilpotent
orbit bookkeeping for the monotone A-infinity quiver."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from rmx import ar_quiver as ar
from rmx import root_system as rs
from rmx.ar_quiver import DeltaVertex, DynkinQuiver, IndecObject
from rmx.denominators import Monomial
from rmx.root_system import CartanData


class _Zero:
    """Sentinel for annihilated family roots (interval length N)."""

    def __repr__(self):
        return "ZERO"


ZERO = _Zero()


@dataclass(frozen=True)
class GammaWindow:
    """A finite full subquiver of the Ext quiver: vertices plus arrow counts."""

    vertices: tuple
    arrows: tuple[tuple[object, object, int], ...]  # (src, dst, multiplicity)

    def arrow_mult(self, u, v) -> int:
        for a, b, m in self.arrows:
            if (a, b) == (u, v):
                return m
        return 0


@dataclass(frozen=True)
class FamilyMap:
    """An injective map from an integer interval into the repetition quiver."""

    j_lo: int
    j_hi: int
    image: tuple[DeltaVertex, ...]

    def __post_init__(self):
        if len(self.image) != self.j_hi - self.j_lo + 1:
            raise ValueError("image length does not match the domain interval")
        if len(set(self.image)) != len(self.image):
            raise ValueError("family map must be injective")

    @property
    def domain(self) -> range:
        return range(self.j_lo, self.j_hi + 1)

    def of(self, j: int) -> DeltaVertex:
        if not self.j_lo <= j <= self.j_hi:
            raise KeyError(f"j = {j} outside domain [{self.j_lo}, {self.j_hi}]")
        return self.image[j - self.j_lo]


def _arrow_mult(cd: CartanData, u: DeltaVertex, v: DeltaVertex) -> int:
    # arrows u -> v counted by dim Ext^1 out of the object at u into the
    # object at v, so they strictly decrease the height coordinate
    return ar.ext1_dim(cd, v, u)


def gamma_window(cd: CartanData, p_lo: int, p_hi: int) -> GammaWindow:
    """The Ext quiver restricted to heights p_lo..p_hi."""
    if p_lo > p_hi:
        return GammaWindow(vertices=(), arrows=())
    verts = tuple(ar.delta_vertices(cd, p_lo, p_hi))
    arrows = []
    for u in verts:
        for v in verts:
            m = _arrow_mult(cd, u, v)
            if m:
                arrows.append((u, v, m))
    return GammaWindow(vertices=verts, arrows=tuple(arrows))


def gamma_J(cd: CartanData, fam: FamilyMap) -> GammaWindow:
    """Full subquiver on the family image, re-indexed by the domain."""
    arrows = []
    for j in fam.domain:
        for jp in fam.domain:
            m = _arrow_mult(cd, fam.of(j), fam.of(jp))
            if m:
                arrows.append((j, jp, m))
    return GammaWindow(vertices=tuple(fam.domain), arrows=tuple(arrows))


def verify_a_infinity(cd: CartanData, fam: FamilyMap) -> bool:
    """Whether the family quiver is the monotone chain j -> j+1."""
    expected = tuple(
        (j, j + 1, 1) for j in range(fam.j_lo, fam.j_hi)
    )
    return gamma_J(cd, fam).arrows == expected


# ---------------------------------------------------------------------------
# type-A subquiver families


def _check_type_a_subquiver(Q: DynkinQuiver, N: int) -> None:
    cd = Q.cd
    if not 2 <= N <= cd.rank + 1:
        raise ValueError(f"N = {N} outside 2..rank+1")
    sub = set(range(1, N))
    path = {(i, i + 1) for i in range(1, N - 1)}
    induced_edges = {
        (min(u, v), max(u, v)) for u, v in cd.edges if u in sub and v in sub
    }
    if induced_edges != path:
        raise ValueError("vertices 1..N-1 do not induce a path")
    for i in range(1, N - 1):
        if (i, i + 1) not in Q.arrows:
            raise ValueError("subquiver on 1..N-1 is not monotonely oriented")


def type_a_family(cd: CartanData, Q: DynkinQuiver, xi, N: int,
                  j_lo: int, j_hi: int) -> FamilyMap:
    """The family j -> x(j): simples of the type-A path at even shifts, with
    the long interval root theta = alpha_1 + ... + alpha_(N-1) filling the
    multiples of N at odd shifts."""
    ar.check_height(Q, xi)
    _check_type_a_subquiver(Q, N)
    theta = tuple(1 if v < N else 0 for v in cd.vertices)
    image = []
    for j in range(j_lo, j_hi + 1):
        i = (j - 1) % N + 1
        k = (j - i) // N
        if i < N:
            obj = IndecObject(rs.simple_root(cd, i), -2 * k)
        else:
            obj = IndecObject(theta, -2 * k - 1)
        image.append(ar.happel_inverse(Q, xi, obj))
    return FamilyMap(j_lo=j_lo, j_hi=j_hi, image=tuple(image))


def x_of_root(cd: CartanData, Q: DynkinQuiver, xi, N: int, j: int, l: int):
    """Family vertex of the interval root alpha(j; l), or ZERO when l = N.

    Interval modules of length l < N correspond, through the repetitive
    algebra of the type-A path, to the subpath object at (l, xi_l - 2j + 2),
    transported into the ambient repetition quiver.
    """
    if not 1 <= l <= N:
        raise ValueError(f"interval length {l} outside 1..N")
    if l == N:
        return ZERO
    _check_type_a_subquiver(Q, N)
    sub_cd = rs.build_cartan("A", N - 1, parity_base=cd.eps_of(1))
    sub_Q = ar.orient(sub_cd, [(i, i + 1) for i in range(1, N - 1)])
    sub_xi = tuple(xi[:N - 1])
    obj = ar.happel_object(sub_Q, sub_xi, (l, xi[l - 1] - 2 * j + 2))
    padded = obj.root + (0,) * (cd.rank - (N - 1))
    return ar.happel_inverse(Q, xi, IndecObject(padded, obj.shift))


# ---------------------------------------------------------------------------
# Kostant partitions of the monotone A-infinity quiver


@dataclass(frozen=True)
class KostantPartition:
    """Multiset of interval roots alpha(j; l) -> multiplicity."""

    nu: tuple[tuple[tuple[int, int], int], ...]

    def beta(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (j, l), c in self.nu:
            for t in range(l):
                out[j + t] = out.get(j + t, 0) + c
        return out

    def weight(self) -> int:
        return sum(l * c for (_, l), c in self.nu)

    def parts(self) -> int:
        return sum(c for _, c in self.nu)


def delta_partition(j: int, l: int) -> KostantPartition:
    """The one-part partition of the single interval root alpha(j; l)."""
    return KostantPartition(nu=(((j, l), 1),))


def kostant_partitions(beta: dict[int, int],
                       max_len: int | None = None) -> list[KostantPartition]:
    """All ways to write beta as a sum of interval roots of length <= max_len."""
    beta = {j: d for j, d in beta.items() if d}
    if any(d < 0 for d in beta.values()):
        raise ValueError("beta must be nonnegative")

    def rec(rem: dict[int, int]):
        if not rem:
            yield []
            return
        j0 = min(rem)
        span = max(rem) - j0 + 1
        cap = span if max_len is None else min(span, max_len)
        count = rem[j0]
        for lens in combinations_with_replacement(range(1, cap + 1), count):
            nxt = dict(rem)
            ok = True
            for l in lens:
                for t in range(l):
                    nxt[j0 + t] = nxt.get(j0 + t, 0) - 1
                    if nxt[j0 + t] < 0:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            nxt = {j: d for j, d in nxt.items() if d}
            head = [(j0, l) for l in lens]
            for tail in rec(nxt):
                yield head + tail

    out = []
    for items in rec(beta):
        counts: dict[tuple[int, int], int] = {}
        for key in items:
            counts[key] = counts.get(key, 0) + 1
        out.append(KostantPartition(nu=tuple(sorted(counts.items()))))
    return sorted(out, key=lambda kp: kp.nu)


def m_nu(cd: CartanData, Q: DynkinQuiver, xi, N: int,
         nu: KostantPartition) -> Monomial:
    """The dominant monomial of a partition: one Y per surviving interval."""
    mono = Monomial.unit()
    for (j, l), c in nu.nu:
        x = x_of_root(cd, Q, xi, N, j, l)
        if x is ZERO:
            continue
        mono = mono * Monomial.y(*x, e=c)
    return mono


def _interval_hom(a: tuple[int, int], b: tuple[int, int]) -> int:
    """Hom count between interval modules of the monotone chain."""
    (ja, la), (jb, lb) = a, b
    a_lo, a_hi = ja, ja + la - 1
    b_lo, b_hi = jb, jb + lb - 1
    return 1 if b_lo <= a_lo <= b_hi <= a_hi else 0


def orbit_census(beta: dict[int, int], N: int):
    """Orbit dimensions of the graded nilpotent variety, one per partition.

    dim of the orbit of nu is dim G_beta minus the endomorphism count of the
    corresponding interval-module direct sum.
    """
    dim_g = sum(d * d for d in beta.values())
    out = []
    for kp in kostant_partitions(beta, N):
        end = 0
        for (ia, ca) in kp.nu:
            for (ib, cb) in kp.nu:
                end += ca * cb * _interval_hom(ia, ib)
        out.append((kp, dim_g - end))
    return out
