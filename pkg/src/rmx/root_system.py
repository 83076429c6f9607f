"""Simply-laced root systems: Cartan data, positive roots, Weyl reflections.

Vertex labels are 1-based and fixed once and for all:

* ``A_n``: path 1 - 2 - ... - n
* ``D_n``: path 1 - ... - (n-2), with both n-1 and n attached to n-2
* ``E_n``: path 1 - ... - (n-1), with n attached to 3

Root-lattice vectors are integer tuples in the simple-root basis, so the
pairing with the fundamental weight ``w_j`` is simply coordinate ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

Vec = tuple[int, ...]

FAMILIES = ("A", "D", "E")


class InvalidTypeError(ValueError):
    """Raised for a family/rank combination outside type ADE."""


def _edges_for(family: str, rank: int) -> list[tuple[int, int]]:
    if family == "A":
        if rank < 1:
            raise InvalidTypeError(f"A_n needs n >= 1, got {rank}")
        return [(i, i + 1) for i in range(1, rank)]
    if family == "D":
        if rank < 4:
            raise InvalidTypeError(f"D_n needs n >= 4, got {rank}")
        edges = [(i, i + 1) for i in range(1, rank - 2)]
        edges += [(rank - 2, rank - 1), (rank - 2, rank)]
        return edges
    if family == "E":
        if rank not in (6, 7, 8):
            raise InvalidTypeError(f"E_n needs n in {{6,7,8}}, got {rank}")
        return [(i, i + 1) for i in range(1, rank - 1)] + [(3, rank)]
    raise InvalidTypeError(f"unknown family {family!r}")


@dataclass(frozen=True)
class CartanData:
    """Immutable Cartan datum of a simply-laced simple Lie algebra.

    ``cartan`` is the symmetric Cartan matrix, ``edges`` the unordered
    adjacency, ``h`` the Coxeter number, ``star`` the involution induced by
    the longest Weyl element, ``eps`` a parity function (eps_i != eps_j for
    adjacent i, j).
    """

    family: str
    rank: int
    cartan: tuple[Vec, ...]
    edges: tuple[tuple[int, int], ...]
    h: int
    star: Vec
    eps: Vec

    @property
    def vertices(self) -> range:
        return range(1, self.rank + 1)

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(v for u, v in self.edges if u == i) + tuple(
            u for u, v in self.edges if v == i
        )

    def c(self, i: int, j: int) -> int:
        return self.cartan[i - 1][j - 1]

    def adjacent(self, i: int, j: int) -> bool:
        return self.c(i, j) == -1

    def star_of(self, i: int) -> int:
        return self.star[i - 1]

    def eps_of(self, i: int) -> int:
        return self.eps[i - 1]

    def label(self) -> str:
        return f"{self.family}{self.rank}"


def simple_root(cd: CartanData, i: int) -> Vec:
    return tuple(1 if j == i else 0 for j in cd.vertices)


def reflect(cd: CartanData, i: int, v: Vec) -> Vec:
    """Simple reflection r_i in root coordinates: subtract (v, alpha_i)*alpha_i."""
    pairing = sum(v[j] * cd.cartan[i - 1][j] for j in range(cd.rank))
    return tuple(v[j] - (pairing if j == i - 1 else 0) for j in range(cd.rank))


def _distances_from_one(edges: list[tuple[int, int]], rank: int) -> list[int]:
    adj: dict[int, list[int]] = {i: [] for i in range(1, rank + 1)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    dist = {1: 0}
    queue = [1]
    while queue:
        u = queue.pop(0)
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return [dist[i] for i in range(1, rank + 1)]


def _positive_roots_from(cartan: tuple[Vec, ...], rank: int) -> list[Vec]:
    # Closure of the simple roots under simple reflections, keeping the
    # vectors that stay in the positive cone.
    def refl(i: int, v: Vec) -> Vec:
        pairing = sum(v[j] * cartan[i][j] for j in range(rank))
        return tuple(v[j] - (pairing if j == i else 0) for j in range(rank))

    roots = {tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)}
    frontier = list(roots)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(rank):
                w = refl(i, v)
                if all(c >= 0 for c in w) and w not in roots:
                    roots.add(w)
                    nxt.append(w)
        frontier = nxt
    return sorted(roots)


def _longest_word(cartan: tuple[Vec, ...], rank: int, n_pos: int) -> list[int]:
    # Drive rho = (1,...,1) (weight basis) to -rho, recording reflections.
    # In the weight basis r_i acts by lam_j -> lam_j - lam_i * c_ij.
    lam = [1] * rank
    word: list[int] = []
    while any(x > 0 for x in lam):
        i = next(k for k in range(rank) if lam[k] > 0)
        coef = lam[i]
        for j in range(rank):
            lam[j] -= coef * cartan[i][j]
        word.append(i + 1)
    assert all(x == -1 for x in lam) and len(word) == n_pos
    return word


def build_cartan(family: str, rank: int, parity_base: int = 0) -> CartanData:
    """Construct the Cartan datum for the given ADE type.

    ``parity_base`` selects between the two admissible parity functions:
    eps_i = (graph distance from vertex 1 + parity_base) mod 2.
    """
    if parity_base not in (0, 1):
        raise ValueError("parity_base must be 0 or 1")
    edges = _edges_for(family, rank)
    cartan = tuple(
        tuple(
            2 if i == j else (-1 if (min(i, j), max(i, j)) in
                              {(min(u, v), max(u, v)) for u, v in edges} else 0)
            for j in range(1, rank + 1)
        )
        for i in range(1, rank + 1)
    )
    dist = _distances_from_one(edges, rank)
    eps = tuple((d + parity_base) % 2 for d in dist)

    pos = _positive_roots_from(cartan, rank)
    n_pos = len(pos)
    assert (2 * n_pos) % rank == 0
    h = 2 * n_pos // rank

    word = _longest_word(cartan, rank, n_pos)
    star = []
    for i in range(1, rank + 1):
        v = tuple(1 if j == i else 0 for j in range(1, rank + 1))
        for k in word:
            pairing = sum(v[j] * cartan[k - 1][j] for j in range(rank))
            v = tuple(v[j] - (pairing if j == k - 1 else 0) for j in range(rank))
        negs = [j + 1 for j, c in enumerate(v) if c == -1]
        assert len(negs) == 1 and sum(map(abs, v)) == 1
        star.append(negs[0])

    return CartanData(
        family=family,
        rank=rank,
        cartan=cartan,
        edges=tuple(edges),
        h=h,
        star=tuple(star),
        eps=eps,
    )


@lru_cache(maxsize=None)
def positive_roots(cd: CartanData) -> tuple[Vec, ...]:
    """All positive roots in lexicographic order on root coordinates."""
    return tuple(_positive_roots_from(cd.cartan, cd.rank))


def is_positive_root(cd: CartanData, v: Vec) -> bool:
    return v in set(positive_roots(cd))


def coxeter_number(cd: CartanData) -> int:
    return cd.h


def star_involution(cd: CartanData, i: int) -> int:
    return cd.star_of(i)


def all_ade_types(max_rank: int = 8) -> list[tuple[str, int]]:
    """Every ADE (family, rank) pair with rank <= max_rank."""
    out = [("A", n) for n in range(1, max_rank + 1)]
    out += [("D", n) for n in range(4, max_rank + 1)]
    out += [("E", n) for n in (6, 7, 8) if n <= max_rank]
    return out
