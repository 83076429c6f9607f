"""Brute-force ground truth: explicit quiver representations over Q.

Representations carry exact rational matrices; Hom and Ext^1 come from the
intertwining linear system, indecomposables are built randomly and certified
by dim End = 1 (with a reflection-functor construction as deterministic
fallback), and Krull-Schmidt decomposition is recovered by solving the
Hom-count linear system against all indecomposables.

Floating point is deliberately impossible here: every matrix entry is an int
or Fraction and every rank decision is exact.
"""

from __future__ import annotations

import hashlib
import os
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from rmx import ar_quiver as ar
from rmx import linalg as la
from rmx import root_system as rs
from rmx.ar_quiver import DynkinQuiver, IndecObject
from rmx.root_system import Vec


class OracleError(RuntimeError):
    """An internal consistency check of the oracle failed."""


@dataclass
class QuiverRep:
    """Per-vertex dimensions plus one exact matrix per arrow.

    The matrix on arrow u -> v has shape dims[v-1] x dims[u-1]; rows of a
    zero-row matrix are simply absent.
    """

    Q: DynkinQuiver
    dims: Vec
    mats: dict

    def __post_init__(self):
        if len(self.dims) != self.Q.cd.rank:
            raise ValueError("dims length mismatch")
        fixed = {}
        for a in self.Q.arrows:
            u, v = a
            m = [list(row) for row in self.mats.get(a, [])]
            if len(m) != self.dims[v - 1] or any(
                len(row) != self.dims[u - 1] for row in m
            ):
                raise ValueError(f"matrix shape mismatch on arrow {u}->{v}")
            fixed[a] = tuple(tuple(x for x in row) for row in m)
        self.mats = fixed

    def mat(self, a) -> list[list[Fraction]]:
        return [list(row) for row in self.mats[a]]


@dataclass
class HomBasis:
    """A verified basis of the intertwiner space Hom(M, N)."""

    dimension: int
    basis: list[dict]  # vertex -> matrix (list of rows)


def zero_rep(Q: DynkinQuiver) -> QuiverRep:
    n = Q.cd.rank
    return QuiverRep(Q, (0,) * n, {a: [] for a in Q.arrows})


def simple_rep(Q: DynkinQuiver, i: int) -> QuiverRep:
    dims = tuple(1 if j == i else 0 for j in Q.cd.vertices)
    return _rep_with_unit_mats(Q, dims)


def injective_rep(Q: DynkinQuiver, i: int) -> QuiverRep:
    """The injective hull I_i: thin support on vertices flowing into i."""
    return _rep_with_unit_mats(Q, ar.gamma_vector(Q, i))


def _rep_with_unit_mats(Q: DynkinQuiver, dims: Vec) -> QuiverRep:
    mats = {}
    for u, v in Q.arrows:
        if dims[u - 1] == 1 and dims[v - 1] == 1:
            mats[(u, v)] = [[1]]
        else:
            mats[(u, v)] = [[0] * dims[u - 1] for _ in range(dims[v - 1])]
    return QuiverRep(Q, dims, mats)


def direct_sum(reps: list[QuiverRep]) -> QuiverRep:
    if not reps:
        raise ValueError("empty direct sum needs an explicit quiver")
    Q = reps[0].Q
    if any(r.Q != Q for r in reps):
        raise ValueError("summands live over different quivers")
    n = Q.cd.rank
    dims = tuple(sum(r.dims[k] for r in reps) for k in range(n))
    mats = {}
    for a in Q.arrows:
        u, v = a
        rows = []
        coffs = []
        c = 0
        for r in reps:
            coffs.append(c)
            c += r.dims[u - 1]
        for r, coff in zip(reps, coffs):
            for row in r.mats[a]:
                full = [0] * dims[u - 1]
                full[coff:coff + r.dims[u - 1]] = list(row)
                rows.append(full)
        mats[a] = rows
    return QuiverRep(Q, dims, mats)


# ---------------------------------------------------------------------------
# Hom / Ext^1 by exact linear algebra


def _block_offsets(sizes: list[int]) -> list[int]:
    offs = [0]
    for s in sizes:
        offs.append(offs[-1] + s)
    return offs


def _intertwiner_matrix(M: QuiverRep, N: QuiverRep):
    """Matrix of Phi(f)_a = N_a f_{src(a)} - f_{tgt(a)} M_a.

    Unknowns are the entries of the vertex maps f_v (shape N_v x M_v),
    rows are indexed by arrow blocks (shape N_{tgt} x M_{src}).
    """
    Q = M.Q
    n = Q.cd.rank
    cols_per_vertex = [N.dims[v] * M.dims[v] for v in range(n)]
    col_off = _block_offsets(cols_per_vertex)
    ncols = col_off[-1]
    arrows = sorted(Q.arrows)
    rows = []
    for a in arrows:
        u, w = a
        Na, Ma = N.mats[a], M.mats[a]
        for rho in range(N.dims[w - 1]):
            for sig in range(M.dims[u - 1]):
                row = [0] * ncols
                # + (N_a f_u)[rho][sig] = sum_t N_a[rho][t] f_u[t][sig]
                for t in range(N.dims[u - 1]):
                    row[col_off[u - 1] + t * M.dims[u - 1] + sig] += Na[rho][t]
                # - (f_w M_a)[rho][sig] = - sum_s f_w[rho][s] M_a[s][sig]
                for s in range(M.dims[w - 1]):
                    row[col_off[w - 1] + rho * M.dims[w - 1] + s] -= Ma[s][sig]
                rows.append(row)
    return rows, ncols, col_off, arrows


def hom_basis(M: QuiverRep, N: QuiverRep) -> HomBasis:
    """Verified basis of the solution space of the intertwining system."""
    if M.Q != N.Q:
        raise ValueError("representations live over different quivers")
    Q = M.Q
    n = Q.cd.rank
    rows, ncols, col_off, _ = _intertwiner_matrix(M, N)
    kernel = la.nullspace(rows, ncols)
    basis = []
    for vec in kernel:
        f = {}
        for v in range(1, n + 1):
            nv, mv = N.dims[v - 1], M.dims[v - 1]
            block = vec[col_off[v - 1]:col_off[v - 1] + nv * mv]
            f[v] = [block[t * mv:(t + 1) * mv] for t in range(nv)]
        _check_intertwiner(M, N, f)
        basis.append(f)
    return HomBasis(dimension=len(basis), basis=basis)


def _mm(a, b, n: int, k: int, m: int):
    """Shape-explicit product of an n x k and a k x m matrix."""
    return [
        [sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)]
        for i in range(n)
    ]


def _check_intertwiner(M: QuiverRep, N: QuiverRep, f: dict) -> None:
    for a in M.Q.arrows:
        u, w = a
        lhs = _mm(N.mats[a], f[u], N.dims[w - 1], N.dims[u - 1], M.dims[u - 1])
        rhs = _mm(f[w], M.mats[a], N.dims[w - 1], M.dims[w - 1], M.dims[u - 1])
        if lhs != rhs:
            raise OracleError(f"nullspace vector fails intertwining on {u}->{w}")


def hom_dim_rep(M: QuiverRep, N: QuiverRep) -> int:
    return hom_basis(M, N).dimension


def ext1_dim_rep(M: QuiverRep, N: QuiverRep) -> int:
    """dim coker of the intertwiner map, i.e. dim Ext^1(M, N)."""
    if M.Q != N.Q:
        raise ValueError("representations live over different quivers")
    rows, ncols, _, _ = _intertwiner_matrix(M, N)
    return len(rows) - la.rank(rows, ncols) if rows else 0


# ---------------------------------------------------------------------------
# indecomposables


_indec_cache: dict = {}


def _stable_seed(*parts) -> int:
    digest = hashlib.sha256(repr(parts).encode()).digest()
    return int.from_bytes(digest[:8], "big")


def base_seed() -> int:
    env = os.environ.get("RMX_SEED")
    return int(env) if env else 0


def indec_rep(Q: DynkinQuiver, alpha: Vec, max_retries: int = 20) -> QuiverRep:
    """The indecomposable representation with dimension vector alpha.

    Deterministic random integer matrices, certified by dim End = 1 and
    retried a bounded number of times; falls back to building tau-translates
    of an injective through reflection functors.
    """
    if not rs.is_positive_root(Q.cd, alpha):
        raise ValueError(f"{alpha} is not a positive root")
    key = (Q, alpha, base_seed())
    if key in _indec_cache:
        return _indec_cache[key]
    rep = None
    for attempt in range(max_retries):
        cand = _random_rep(Q, alpha, _stable_seed(base_seed(), Q.arrows, alpha, attempt))
        if hom_dim_rep(cand, cand) == 1:
            rep = cand
            break
    if rep is None:
        rep = _indec_rep_bgp(Q, alpha)
        if hom_dim_rep(rep, rep) != 1:
            raise OracleError(f"reflection construction failed End certificate for {alpha}")
    _indec_cache[key] = rep
    return rep


def _random_rep(Q: DynkinQuiver, dims: Vec, seed: int) -> QuiverRep:
    rng = random.Random(seed)
    mats = {}
    for u, v in Q.arrows:
        mats[(u, v)] = [
            [rng.randint(1, 9) for _ in range(dims[u - 1])]
            for _ in range(dims[v - 1])
        ]
    return QuiverRep(Q, dims, mats)


def _indec_rep_bgp(Q: DynkinQuiver, alpha: Vec) -> QuiverRep:
    """Build M_alpha as tau^s(I_i) via sink-ordered reflection functors."""
    xi = ar.default_height(Q)
    i, p = ar.happel_inverse(Q, xi, IndecObject(alpha, 0))
    steps = (xi[i - 1] - p) // 2
    assert steps >= 0
    rep = injective_rep(Q, i)
    order = tuple(sorted(Q.cd.vertices, key=lambda v: (xi[v - 1], v)))
    for _ in range(steps):
        for v in order:
            rep = reflection_functor(rep.Q, v, rep)
        assert rep.Q == Q
    if rep.dims != alpha:
        raise OracleError(f"tau walk landed on {rep.dims}, wanted {alpha}")
    return rep


def reflection_functor(Q: DynkinQuiver, i: int, R: QuiverRep) -> QuiverRep:
    """BGP reflection at a sink (plus) or source (minus) vertex.

    The result lives over the quiver with all arrows at i reversed; on
    indecomposables other than S_i the dimension vector is reflected by r_i.
    """
    if R.Q != Q:
        raise ValueError("representation not over the given quiver")
    ins = sorted(a for a in Q.arrows if a[1] == i)
    outs = sorted(a for a in Q.arrows if a[0] == i)
    if ins and outs:
        raise ValueError(f"vertex {i} is neither a sink nor a source")
    flipped = ar.orient(
        Q.cd,
        [(v, u) if u == i or v == i else (u, v) for u, v in Q.arrows],
    )
    n = Q.cd.rank
    new_dims = list(R.dims)
    new_mats = {
        (v, u) if u == i or v == i else (u, v): R.mat((u, v))
        for u, v in Q.arrows
        if u != i and v != i
    }

    if not ins and not outs:  # isolated vertex (rank 1): nothing to do
        return QuiverRep(flipped, R.dims, {a: R.mat(a) for a in Q.arrows})

    if ins:  # sink: new space is the kernel of the assembled map into V_i
        sources = [u for u, _ in ins]
        sizes = [R.dims[u - 1] for u in sources]
        offs = _block_offsets(sizes)
        total = offs[-1]
        T = [[0] * total for _ in range(R.dims[i - 1])]
        for (u, _), off in zip(ins, offs):
            m = R.mats[(u, i)]
            for r in range(len(m)):
                for c in range(len(m[r])):
                    T[r][off + c] = m[r][c]
        kernel = la.nullspace(T, total)
        k = len(kernel)
        new_dims[i - 1] = k
        for (u, _), off in zip(ins, offs):
            du = R.dims[u - 1]
            new_mats[(i, u)] = [
                [kernel[col][off + r] for col in range(k)] for r in range(du)
            ]
    else:  # source: new space is the cokernel of the map out of V_i
        targets = [v for _, v in outs]
        sizes = [R.dims[v - 1] for v in targets]
        offs = _block_offsets(sizes)
        total = offs[-1]
        T = [[0] * R.dims[i - 1] for _ in range(total)]
        for (_, v), off in zip(outs, offs):
            m = R.mats[(i, v)]
            for r in range(len(m)):
                for c in range(len(m[r])):
                    T[off + r][c] = m[r][c]
        Tt = [[T[r][c] for r in range(total)] for c in range(R.dims[i - 1])]
        pi = la.nullspace(Tt, total)  # rows spanning the left kernel
        k = len(pi)
        new_dims[i - 1] = k
        for (_, v), off in zip(outs, offs):
            dv = R.dims[v - 1]
            new_mats[(v, i)] = [
                [pi[r][off + c] for c in range(dv)] for r in range(k)
            ]
    return QuiverRep(flipped, tuple(new_dims), new_mats)


# ---------------------------------------------------------------------------
# extensions and decomposition


def nonsplit_extension(Msub: QuiverRep, Mquot: QuiverRep) -> QuiverRep:
    """The unique middle term when Ext^1(Mquot, Msub) is one-dimensional."""
    if Msub.Q != Mquot.Q:
        raise ValueError("representations live over different quivers")
    Q = Msub.Q
    rows, ncols, _, arrows = _intertwiner_matrix(Mquot, Msub)
    nrows = len(rows)
    ext = nrows - la.rank(rows, ncols) if rows else 0
    if ext != 1:
        raise ValueError(f"Ext^1(quotient, sub) = {ext}, need exactly 1")
    # pick a standard basis vector of the arrow-block space outside im(Phi)
    cocycle_flat = None
    for kidx in range(nrows):
        e = [Fraction(1) if r == kidx else Fraction(0) for r in range(nrows)]
        if not la.in_column_space(rows, e, ncols):
            cocycle_flat = kidx
            break
    if cocycle_flat is None:
        raise OracleError("no cocycle found despite nonzero cokernel")
    # unpack the chosen unit cocycle into per-arrow blocks
    cocycle = {}
    idx = 0
    for a in arrows:
        u, w = a
        block = [[0] * Mquot.dims[u - 1] for _ in range(Msub.dims[w - 1])]
        for rho in range(Msub.dims[w - 1]):
            for sig in range(Mquot.dims[u - 1]):
                if idx == cocycle_flat:
                    block[rho][sig] = 1
                idx += 1
        cocycle[a] = block

    dims = tuple(s + q for s, q in zip(Msub.dims, Mquot.dims))
    mats = {}
    for a in Q.arrows:
        u, w = a
        su, qu = Msub.dims[u - 1], Mquot.dims[u - 1]
        sw, qw = Msub.dims[w - 1], Mquot.dims[w - 1]
        block = [[0] * (su + qu) for _ in range(sw + qw)]
        for r in range(sw):
            for c in range(su):
                block[r][c] = Msub.mats[a][r][c]
            for c in range(qu):
                block[r][su + c] = cocycle[a][r][c]
        for r in range(qw):
            for c in range(qu):
                block[sw + r][su + c] = Mquot.mats[a][r][c]
        mats[a] = block
    return QuiverRep(Q, dims, mats)


_gram_cache: dict = {}


def _hom_gram(Q: DynkinQuiver):
    """Hom counts between all indecomposables, plus the ordered root list."""
    if Q not in _gram_cache:
        roots = rs.positive_roots(Q.cd)
        reps = [indec_rep(Q, g) for g in roots]
        gram = [[hom_dim_rep(a, b) for b in reps] for a in reps]
        _gram_cache[Q] = (roots, gram)
    return _gram_cache[Q]


def decompose(R: QuiverRep) -> Counter:
    """The multiset of roots with R isomorphic to the matching direct sum.

    Solves the exact system sum_d hom(M_g, M_d) mu_d = hom(M_g, R) over all
    positive roots g; modules over a representation-finite algebra are pinned
    down by these Hom counts.
    """
    Q = R.Q
    roots, gram = _hom_gram(Q)
    target = [hom_dim_rep(indec_rep(Q, g), R) for g in roots]
    mu = la.solve(gram, target, len(roots))
    if mu is None:
        raise OracleError("Hom-count system inconsistent")
    out: Counter = Counter()
    for g, m in zip(roots, mu):
        if m.denominator != 1 or m < 0:
            raise OracleError(f"non-integral or negative multiplicity {m} at {g}")
        if m:
            out[g] = int(m)
    recon = tuple(
        sum(out[g] * g[k] for g in out) for k in range(Q.cd.rank)
    )
    if recon != R.dims:
        raise OracleError(f"multiplicities rebuild {recon}, expected {R.dims}")
    return out
