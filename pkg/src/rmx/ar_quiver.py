"""Dynkin quivers, height functions, and the derived-category combinatorics.

Indecomposable derived objects are modeled as (positive root, shift) pairs;
the Auslander-Reiten translate acts by the knitting rule: apply the Coxeter
element to the root and absorb a sign flip into the shift.  The bijection
between repetition-quiver vertices (i, p) and objects is computed exactly,
never tabulated per type.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from rmx import quantum_cartan as qc
from rmx import root_system as rs
from rmx.root_system import CartanData, Vec

DeltaVertex = tuple[int, int]  # (vertex i, height p) with p = eps_i mod 2


@dataclass(frozen=True)
class DynkinQuiver:
    """An orientation of the Dynkin diagram: one directed arrow per edge."""

    cd: CartanData
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        undirected = {(min(u, v), max(u, v)) for u, v in self.arrows}
        expected = {(min(u, v), max(u, v)) for u, v in self.cd.edges}
        if undirected != expected or len(self.arrows) != len(self.cd.edges):
            raise ValueError("arrows must orient each diagram edge exactly once")

    def label(self) -> str:
        return ",".join(f"{u}>{v}" for u, v in sorted(self.arrows))


def orient(cd: CartanData, arrows) -> DynkinQuiver:
    return DynkinQuiver(cd=cd, arrows=tuple(sorted(arrows)))


def monotone_quiver(cd: CartanData) -> DynkinQuiver:
    """The orientation of the type diagrams used throughout: u -> v for u < v."""
    return orient(cd, [(min(u, v), max(u, v)) for u, v in cd.edges])


def sink_source_quiver(cd: CartanData) -> DynkinQuiver:
    """Bipartite orientation: every odd-parity vertex a source."""
    arrows = []
    for u, v in cd.edges:
        if cd.eps_of(u) == 1:
            arrows.append((u, v))
        else:
            arrows.append((v, u))
    return orient(cd, arrows)


def random_orientation(cd: CartanData, seed: int) -> DynkinQuiver:
    import random

    rng = random.Random(seed)
    arrows = []
    for u, v in cd.edges:
        arrows.append((u, v) if rng.random() < 0.5 else (v, u))
    return orient(cd, arrows)


def all_orientations(cd: CartanData) -> list[DynkinQuiver]:
    from itertools import product

    out = []
    for flips in product((False, True), repeat=len(cd.edges)):
        arrows = [
            (v, u) if f else (u, v) for (u, v), f in zip(cd.edges, flips)
        ]
        out.append(orient(cd, arrows))
    return out


# ---------------------------------------------------------------------------
# height functions


def check_height(Q: DynkinQuiver, xi: tuple[int, ...]) -> None:
    cd = Q.cd
    if len(xi) != cd.rank:
        raise ValueError("height function has wrong length")
    for i in cd.vertices:
        if (xi[i - 1] - cd.eps_of(i)) % 2 != 0:
            raise ValueError(f"xi_{i} = {xi[i-1]} has wrong parity")
    for u, v in Q.arrows:
        if xi[u - 1] != xi[v - 1] + 1:
            raise ValueError(f"xi must drop by 1 along {u}->{v}")


@lru_cache(maxsize=None)
def default_height(Q: DynkinQuiver, xi1: int | None = None) -> tuple[int, ...]:
    """The height function with the given value at vertex 1 (default eps_1)."""
    cd = Q.cd
    if xi1 is None:
        xi1 = cd.eps_of(1)
    if (xi1 - cd.eps_of(1)) % 2 != 0:
        raise ValueError(f"xi1 = {xi1} has wrong parity for vertex 1")
    out = {1: xi1}
    queue = [1]
    while queue:
        u = queue.pop(0)
        for a, b in Q.arrows:
            for src, dst, step in ((a, b, -1), (b, a, +1)):
                if src == u and dst not in out:
                    out[dst] = out[u] + step
                    queue.append(dst)
    xi = tuple(out[i] for i in cd.vertices)
    check_height(Q, xi)
    return xi


def shift_height(xi: tuple[int, ...], even: int) -> tuple[int, ...]:
    if even % 2 != 0:
        raise ValueError("height functions may only be shifted by even integers")
    return tuple(x + even for x in xi)


# ---------------------------------------------------------------------------
# Coxeter element


@lru_cache(maxsize=None)
def coxeter_word(Q: DynkinQuiver, xi: tuple[int, ...]) -> tuple[int, ...]:
    """Vertices by descending height (ties by index); leftmost acts last."""
    check_height(Q, xi)
    return tuple(sorted(Q.cd.vertices, key=lambda i: (-xi[i - 1], i)))


def coxeter_apply(cd: CartanData, word: tuple[int, ...], v: Vec, times: int) -> Vec:
    """Apply tau^times for the Coxeter element given by ``word``."""
    for _ in range(abs(times)):
        seq = reversed(word) if times > 0 else word
        for i in seq:
            v = rs.reflect(cd, i, v)
    return v


def gamma_vector(Q: DynkinQuiver, i: int) -> Vec:
    """Dimension vector of the injective hull I_i: sum of alpha_j over j with
    an oriented path j -> ... -> i (including j = i)."""
    cd = Q.cd
    reach = {i}
    changed = True
    while changed:
        changed = False
        for u, v in Q.arrows:
            if v in reach and u not in reach:
                reach.add(u)
                changed = True
    return tuple(1 if j in reach else 0 for j in cd.vertices)


# ---------------------------------------------------------------------------
# objects and knitting


class IndecObject(NamedTuple):
    """An indecomposable derived object M_root[shift]."""

    root: Vec
    shift: int


def tau_object(Q: DynkinQuiver, xi: tuple[int, ...], obj: IndecObject,
               times: int) -> IndecObject:
    """Iterated AR translate via knitting: a sign flip costs one shift."""
    cd = Q.cd
    word = coxeter_word(Q, xi)
    root, shift = obj
    for _ in range(abs(times)):
        v = coxeter_apply(cd, word, root, 1 if times > 0 else -1)
        if all(c >= 0 for c in v):
            root = v
        else:
            root = tuple(-c for c in v)
            shift += -1 if times > 0 else +1
    return IndecObject(root, shift)


def check_delta_vertex(cd: CartanData, x: DeltaVertex) -> None:
    i, p = x
    if not 1 <= i <= cd.rank:
        raise ValueError(f"vertex index {i} out of range")
    if (p - cd.eps_of(i)) % 2 != 0:
        raise ValueError(f"({i},{p}) violates the parity constraint")


def happel_object(Q: DynkinQuiver, xi: tuple[int, ...], x: DeltaVertex) -> IndecObject:
    """The object tau^((xi_i - p)/2)(I_i) attached to the vertex (i, p)."""
    check_height(Q, xi)
    check_delta_vertex(Q.cd, x)
    i, p = x
    steps = xi[i - 1] - p
    if steps % 2 != 0:
        raise ValueError(f"xi_{i} - p must be even, got {steps}")
    return tau_object(Q, xi, IndecObject(gamma_vector(Q, i), 0), steps // 2)


@lru_cache(maxsize=None)
def _orbit_index(Q: DynkinQuiver, xi: tuple[int, ...]):
    """For each root and shift parity, the (i, p, shift) hit in one tau period."""
    cd = Q.cd
    index: dict[tuple[Vec, int], tuple[int, int, int]] = {}
    for i in cd.vertices:
        obj = IndecObject(gamma_vector(Q, i), 0)
        p = xi[i - 1]
        for s in range(cd.h):
            key = (obj.root, obj.shift % 2)
            assert key not in index
            index[key] = (i, p - 2 * s, obj.shift)
            obj = tau_object(Q, xi, obj, 1)
        assert obj.shift == -2
    return index


def happel_inverse(Q: DynkinQuiver, xi: tuple[int, ...],
                   obj: IndecObject) -> DeltaVertex:
    """The unique (i, p) with happel_object(Q, xi, (i, p)) == obj."""
    check_height(Q, xi)
    if not rs.is_positive_root(Q.cd, obj.root):
        raise ValueError(f"{obj.root} is not a positive root")
    i, p0, s0 = _orbit_index(Q, xi)[(obj.root, obj.shift % 2)]
    return (i, p0 + Q.cd.h * (obj.shift - s0))


@lru_cache(maxsize=None)
def module_strip(Q: DynkinQuiver, xi: tuple[int, ...]) -> dict:
    """All (i, p) whose object is an honest module, mapped to its root."""
    cd = Q.cd
    strip: dict[DeltaVertex, Vec] = {}
    for i in cd.vertices:
        obj = IndecObject(gamma_vector(Q, i), 0)
        p = xi[i - 1]
        while obj.shift == 0:
            strip[(i, p)] = obj.root
            obj = tau_object(Q, xi, obj, 1)
            p -= 2
    return strip


# ---------------------------------------------------------------------------
# pairings


def euler_form(Q: DynkinQuiver, a: Vec, b: Vec) -> int:
    """<a, b> = sum_i a_i b_i - sum_{u -> v} a_u b_v."""
    total = sum(x * y for x, y in zip(a, b))
    total -= sum(a[u - 1] * b[v - 1] for u, v in Q.arrows)
    return total


def ext1_dim(cd: CartanData, x: DeltaVertex, y: DeltaVertex) -> int:
    """dim Ext^1 from the object at y into the object at x:
    ct_ij(r - p - 1) when 1 <= r - p - 1 <= h - 1, else 0."""
    check_delta_vertex(cd, x)
    check_delta_vertex(cd, y)
    (i, p), (j, r) = x, y
    l = r - p - 1
    if 1 <= l <= cd.h - 1:
        return qc.ctilde(cd, i, j, l)
    return 0


def hom_dim(cd: CartanData, x: DeltaVertex, y: DeltaVertex) -> int:
    """dim Hom from the object at x to the object at y:
    ct_ij(r - p + 1) when 0 <= r - p <= h - 2, else 0."""
    check_delta_vertex(cd, x)
    check_delta_vertex(cd, y)
    (i, p), (j, r) = x, y
    if 0 <= r - p <= cd.h - 2:
        return qc.ctilde(cd, i, j, r - p + 1)
    return 0


def delta_vertices(cd: CartanData, p_lo: int, p_hi: int) -> list[DeltaVertex]:
    """Parity-valid vertices (i, p) with p_lo <= p <= p_hi, ordered."""
    out = []
    for i in cd.vertices:
        for p in range(p_lo, p_hi + 1):
            if (p - cd.eps_of(i)) % 2 == 0:
                out.append((i, p))
    return out
