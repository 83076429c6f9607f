"""Named end-to-end checks shared by the CLI selfcheck and the test suite.

Every check is a plain function returning (passed, detail); ``run`` bundles
them into a machine-readable report.  The ``fast`` scope covers ranks <= 5,
``full`` adds the exceptional types, the E6 sampled pairs and the exhaustive
rep-oracle sweeps.
"""

from __future__ import annotations

import json
import random
import time
from collections import Counter

from rmx import ar_quiver as ar
from rmx import denominators as dn
from rmx import quantum_cartan as qc
from rmx import rep_oracle as ro
from rmx import root_system as rs
from rmx import schur_weyl as sw
from rmx.ar_quiver import IndecObject


def _types(max_rank: int):
    return [rs.build_cartan(f, n) for f, n in rs.all_ade_types(max_rank)]


def _three_orientations(cd):
    return [
        ar.monotone_quiver(cd),
        ar.sink_source_quiver(cd),
        ar.random_orientation(cd, seed=11),
    ]


# ---------------------------------------------------------------------------
# individual checks; each returns (passed: bool, detail: str)


def check_ctilde_dual_method(max_rank: int = 8):
    """Recurrence table against the Coxeter-orbit formula, both parities."""
    mismatches = []
    for family, n in rs.all_ade_types(max_rank):
        for parity in (0, 1):
            cd = rs.build_cartan(family, n, parity_base=parity)
            table = qc.ctilde_table(cd, 2 * cd.h)
            for Q in _three_orientations(cd):
                xi = ar.default_height(Q)
                for i in cd.vertices:
                    for j in cd.vertices:
                        for l in range(1, 2 * cd.h + 1):
                            a = table.value(i, j, l)
                            b = qc.ctilde_coxeter(cd, Q, xi, i, j, l)
                            if a != b:
                                mismatches.append((cd.label(), parity, Q.label(), i, j, l, a, b))
    detail = f"{len(mismatches)} mismatches" + (f", first: {mismatches[0]}" if mismatches else "")
    return not mismatches, detail


def check_ctilde_identities(max_rank: int = 8):
    """The eight structural identities of the inverse-matrix coefficients."""
    bad = []
    for cd in _types(max_rank):
        t = qc.ctilde_table(cd, 2 * cd.h)
        v = qc.check_ctilde_identities(t)
        if v:
            bad.append(f"{cd.label()}: {v[0]} (+{len(v) - 1} more)")
    return not bad, "; ".join(bad) if bad else "all identities hold"


def check_ctilde_inversion(max_rank: int = 8):
    """Exact rational evaluation of C(z0) times the truncated inverse."""
    from fractions import Fraction

    bad = []
    sample = [c for c in _types(max_rank) if c.label() in ("A2", "A3", "D4", "E6", "E8")]
    for cd in sample or _types(max_rank):
        resid, bound = qc.rational_inversion_residual(cd, 4 * cd.h, Fraction(1, 5))
        if resid > bound:
            bad.append(f"{cd.label()}: residual {resid} exceeds bound {bound}")
    return not bad, "; ".join(bad) if bad else f"residuals within tail bounds ({len(sample)} types)"


def check_denominators(max_rank: int = 8):
    """Golden low-rank factors, zero-position parity, and symmetry."""
    bad = []
    cd1 = rs.build_cartan("A", 1)
    if dn.denominator(cd1, 1, 1).factors != ((2, 1),):
        bad.append("A1 d11 wrong")
    cd2 = rs.build_cartan("A", 2)
    if dn.denominator(cd2, 1, 1).factors != ((2, 1),):
        bad.append("A2 d11 wrong")
    if dn.denominator(cd2, 2, 2).factors != ((2, 1),):
        bad.append("A2 d22 wrong")
    if dn.denominator(cd2, 1, 2).factors != ((3, 1),):
        bad.append("A2 d12 wrong")
    if dn.denominator(cd2, 2, 1).factors != ((3, 1),):
        bad.append("A2 d21 wrong")
    for cd in _types(max_rank):
        for i in cd.vertices:
            for j in cd.vertices:
                d = dn.denominator(cd, i, j)
                if d.factors != dn.denominator(cd, j, i).factors:
                    bad.append(f"{cd.label()} d{i}{j} asymmetric")
                if d.factors != dn.denominator_kashiwara(cd, i, j).factors:
                    bad.append(f"{cd.label()} d{i}{j} convention changes multiplicities")
                for k, m in d.factors:
                    if k <= 0 or m <= 0 or (k + cd.eps_of(i) + cd.eps_of(j)) % 2 != 0:
                        bad.append(f"{cd.label()} d{i}{j} zero q^{k} violates parity/positivity")
    return not bad, "; ".join(bad[:3]) if bad else "goldens, symmetry and zero positions OK"


def check_tau_nakayama(max_rank: int = 8):
    """tau^h = 1 on roots, knitting period, and the shift-by-one relation."""
    bad = []
    for cd in _types(max_rank):
        h = cd.h
        Q = ar.monotone_quiver(cd)
        xi = ar.default_height(Q)
        word = ar.coxeter_word(Q, xi)
        for alpha in rs.positive_roots(cd):
            if ar.coxeter_apply(cd, word, alpha, h) != alpha:
                bad.append(f"{cd.label()}: tau^h moves {alpha}")
            obj = IndecObject(alpha, 0)
            if ar.tau_object(Q, xi, obj, h) != IndecObject(alpha, -2):
                bad.append(f"{cd.label()}: knitting tau^h is not shift -2 at {alpha}")
        for i, p in ar.delta_vertices(cd, -3 * h, 3 * h):
            a = ar.happel_object(Q, xi, (i, p))
            b = ar.happel_object(Q, xi, (cd.star_of(i), p + h))
            if b != IndecObject(a.root, a.shift + 1):
                bad.append(f"{cd.label()}: H({i},{p})[1] != H(i*, p+h)")
            if ar.happel_inverse(Q, xi, a) != (i, p):
                bad.append(f"{cd.label()}: happel round-trip fails at ({i},{p})")
    return not bad, "; ".join(bad[:3]) if bad else "tau and shift structure exact"


def _ext_oracle_pairs(cd, window: int):
    """All ordered vertex pairs in the window that admit a common heart."""
    verts = ar.delta_vertices(cd, -window, window)
    for x in verts:
        for y in verts:
            placement = dn.common_heart(cd, x, y)
            if placement is not None:
                yield x, y, placement


def check_ext_oracle(labels=("A3", "D4"), e6_samples: int = 0):
    """Window formulas against explicit-representation Hom/Ext, exactly."""
    bad = []
    tested = 0
    for label in labels:
        cd = rs.build_cartan(label[0], int(label[1:]))
        for x, y, placement in _ext_oracle_pairs(cd, 2 * cd.h):
            Qp, xi_t, root_x, root_y = placement
            Mx = ro.indec_rep(Qp, root_x)
            My = ro.indec_rep(Qp, root_y)
            tested += 1
            if dn.pole_order(cd, x, y) != ro.ext1_dim_rep(My, Mx):
                bad.append(f"{label}: ext mismatch at {x},{y}")
            if ar.hom_dim(cd, x, y) != ro.hom_dim_rep(Mx, My):
                bad.append(f"{label}: hom mismatch at {x},{y}")
            if ar.hom_dim(cd, x, y) - ro.ext1_dim_rep(Mx, My) != ar.euler_form(
                Qp, root_x, root_y
            ):
                bad.append(f"{label}: euler reconciliation fails at {x},{y}")
    if e6_samples:
        cd = rs.build_cartan("E", 6)
        rng = random.Random(2024)
        verts = ar.delta_vertices(cd, -2 * cd.h, 2 * cd.h)
        found = 0
        while found < e6_samples:
            x = rng.choice(verts)
            y = rng.choice(verts)
            placement = dn.common_heart(cd, x, y)
            if placement is None:
                continue
            found += 1
            tested += 1
            Qp, xi_t, root_x, root_y = placement
            Mx = ro.indec_rep(Qp, root_x)
            My = ro.indec_rep(Qp, root_y)
            if dn.pole_order(cd, x, y) != ro.ext1_dim_rep(My, Mx):
                bad.append(f"E6: ext mismatch at {x},{y}")
            if ar.hom_dim(cd, x, y) != ro.hom_dim_rep(Mx, My):
                bad.append(f"E6: hom mismatch at {x},{y}")
    return not bad, "; ".join(bad[:3]) if bad else f"{tested} common-heart pairs agree"


def check_closed_forms(include_e: bool = True, max_a_rank: int = 8):
    """Family positions against the explicit per-type formulas, xi_1 = -2."""
    bad = []
    for n in range(1, max_a_rank + 1):
        cd = rs.build_cartan("A", n)
        Q = ar.monotone_quiver(cd)
        fam = sw.type_a_family(cd, Q, ar.default_height(Q, -2), n + 1, -8, 8)
        for j in fam.domain:
            if fam.of(j) != (1, -2 * j):
                bad.append(f"A{n}: x({j}) = {fam.of(j)}")
    for n in (4, 5):
        cd = rs.build_cartan("D", n)
        Q = ar.monotone_quiver(cd)
        h = cd.h
        star = cd.star_of(n - 1)
        fam = sw.type_a_family(cd, Q, ar.default_height(Q, -2), n, -8, 8)
        for j in fam.domain:
            i = (j - 1) % n + 1
            k = (j - i) // n
            if i <= n - 2:
                want = (1, -2 * i - 2 * k * h)
            elif i == n - 1:
                want = (star, -3 * n + 4 - 2 * k * h)
            else:
                want = (star, n - h - 2 * n - 2 * k * h)
            if fam.of(j) != want:
                bad.append(f"D{n}: x({j}) = {fam.of(j)} != {want}")
    if include_e:
        for n in (6, 7, 8):
            cd = rs.build_cartan("E", n)
            Q = ar.monotone_quiver(cd)
            h = cd.h
            star = cd.star_of(n - 1)
            fam = sw.type_a_family(cd, Q, ar.default_height(Q, -2), n, -8, 8)
            for j in fam.domain:
                i = (j - 1) % n + 1
                k = (j - i) // n
                if i <= 3:
                    want = (1, -2 * i - 2 * k * h)
                else:
                    want = (star, n - h - 2 * i - 2 * k * h)
                if fam.of(j) != want:
                    bad.append(f"E{n}: x({j}) = {fam.of(j)} != {want}")
    return not bad, "; ".join(bad[:3]) if bad else "A/D/E closed forms reproduced"


def check_dorey(configs=(("A", 3, 4, 2), ("D", 4, 4, 4))):
    """Middle terms: the rank-2 goldens plus interval-root splittings.

    Each config is (family, rank, N, j_window); for every splitting
    alpha(j;l) = alpha(j;l') + alpha(j+l';l'') with l <= N the middle term
    must be the Y at the combined interval (empty once l = N).
    """
    bad = []
    cd2 = rs.build_cartan("A", 2)
    Q2 = ar.orient(cd2, [(2, 1)])
    got = dn.dorey_middle_term(cd2, Q2, (0, 1), (2, -1), (2, 1), check_all=True)
    if got != dn.Monomial.y(1, 0):
        bad.append(f"A2 golden: {got.render()}")
    cd1 = rs.build_cartan("A", 1)
    Q1 = ar.monotone_quiver(cd1)
    got = dn.dorey_middle_term(cd1, Q1, ar.default_height(Q1), (1, 0), (1, 2))
    if got != dn.Monomial.unit():
        bad.append(f"A1 golden: {got.render()}")
    checked = 0
    for family, rank, N, jwin in configs:
        cd = rs.build_cartan(family, rank)
        Q = ar.monotone_quiver(cd)
        xi = ar.default_height(Q, -2)
        for j in range(-jwin, jwin + 1):
            for l in range(2, N + 1):
                for lp in range(1, l):
                    lpp = l - lp
                    y = sw.x_of_root(cd, Q, xi, N, j, lp)
                    x = sw.x_of_root(cd, Q, xi, N, j + lp, lpp)
                    want_x = sw.x_of_root(cd, Q, xi, N, j, l)
                    want = (
                        dn.Monomial.unit()
                        if want_x is sw.ZERO
                        else dn.Monomial.y(*want_x)
                    )
                    if dn.pole_order(cd, x, y) != 1:
                        bad.append(f"{family}{rank} N={N}: ({j},{lp},{lpp}) pole != 1")
                        continue
                    got = dn.dorey_middle_term(cd, Q, xi, x, y)
                    checked += 1
                    if got != want:
                        bad.append(
                            f"{family}{rank} N={N}: ({j},{lp},{lpp}) -> "
                            f"{got.render()} != {want.render()}"
                        )
    return not bad, "; ".join(bad[:3]) if bad else f"goldens plus {checked} splittings"


def check_kostant_census(max_weight: int = 5):
    """Partition counts, orbit dimensions and single-root monomials, A3/N=4."""
    bad = []
    N = 4
    cd = rs.build_cartan("A", 3)
    Q = ar.monotone_quiver(cd)
    xi = ar.default_height(Q, -2)

    def betas(weight, lo, hi):
        if weight == 0:
            yield {}
            return
        for j in range(lo, hi + 1):
            for rest in betas(weight - 1, j, hi):
                b = dict(rest)
                b[j] = b.get(j, 0) + 1
                yield b

    seen = set()
    for w in range(1, max_weight + 1):
        for beta in betas(w, 0, 3):
            key = tuple(sorted(beta.items()))
            if key in seen:
                continue
            seen.add(key)
            kps = sw.kostant_partitions(beta, N)
            census = sw.orbit_census(beta, N)
            if len(census) != len(kps):
                bad.append(f"beta {key}: census size {len(census)} != {len(kps)}")
            if any(d < 0 for _, d in census):
                bad.append(f"beta {key}: negative orbit dimension")
    for j in range(-2, 3):
        for l in range(1, N + 1):
            got = sw.m_nu(cd, Q, xi, N, sw.delta_partition(j, l))
            x = sw.x_of_root(cd, Q, xi, N, j, l)
            want = dn.Monomial.unit() if x is sw.ZERO else dn.Monomial.y(*x)
            if got != want:
                bad.append(f"m_delta({j},{l}) = {got.render()} != {want.render()}")
    return not bad, "; ".join(bad[:3]) if bad else f"{len(seen)} weight<= {max_weight} betas checked"


def check_rep_oracle(exhaustive=("A3", "D4"), roundtrips: int = 100):
    """Euler identity over indecomposable pairs; decompose round-trips."""
    bad = []
    for label in exhaustive:
        cd = rs.build_cartan(label[0], int(label[1:]))
        Q = ar.monotone_quiver(cd)
        roots = rs.positive_roots(cd)
        reps = {a: ro.indec_rep(Q, a) for a in roots}
        for a in roots:
            if ro.hom_dim_rep(reps[a], reps[a]) != 1:
                bad.append(f"{label}: End != 1 at {a}")
            for b in roots:
                h = ro.hom_dim_rep(reps[a], reps[b])
                e = ro.ext1_dim_rep(reps[a], reps[b])
                if h - e != ar.euler_form(Q, a, b):
                    bad.append(f"{label}: hom-ext != euler at {a},{b}")
    rng = random.Random(99)
    quivers = []
    for label in exhaustive:
        cd = rs.build_cartan(label[0], int(label[1:]))
        quivers.append((ar.monotone_quiver(cd), rs.positive_roots(cd)))
    for case in range(roundtrips):
        Q, roots = quivers[case % len(quivers)]
        picks = [rng.choice(roots) for _ in range(rng.randint(1, 4))]
        total = ro.direct_sum([ro.indec_rep(Q, a) for a in picks])
        if ro.decompose(total) != Counter(picks):
            bad.append(f"round-trip fails for {picks}")
    return not bad, "; ".join(bad[:3]) if bad else f"euler exhaustive + {roundtrips} round-trips"


# ---------------------------------------------------------------------------
# scoped runner


def run(scope: str = "fast") -> dict:
    if scope not in ("fast", "full"):
        raise ValueError("scope must be 'fast' or 'full'")
    full = scope == "full"
    max_rank = 8 if full else 5
    plan = [
        ("ctilde-dual-method", lambda: check_ctilde_dual_method(max_rank)),
        ("ctilde-identities", lambda: check_ctilde_identities(max_rank)),
        ("ctilde-inversion", lambda: check_ctilde_inversion(max_rank)),
        ("denominators", lambda: check_denominators(max_rank)),
        ("tau-nakayama", lambda: check_tau_nakayama(max_rank)),
        ("ext-oracle", lambda: check_ext_oracle(
            ("A3", "D4") if full else ("A3",), e6_samples=200 if full else 0)),
        ("closed-forms", lambda: check_closed_forms(include_e=full,
                                                    max_a_rank=max_rank)),
        ("dorey", lambda: check_dorey(
            (("A", 3, 4, 2), ("D", 4, 4, 4)) if full else (("A", 3, 4, 2),))),
        ("kostant-census", lambda: check_kostant_census(5 if full else 4)),
        ("rep-oracle", lambda: check_rep_oracle(
            ("A3", "D4") if full else ("A3",), 100 if full else 40)),
    ]
    checks = []
    for name, fn in plan:
        t0 = time.monotonic()
        try:
            passed, detail = fn()
        except Exception as exc:  # a crash is a failed check, not a crash of the tool
            passed, detail = False, f"exception: {exc!r}"
        checks.append({
            "name": name,
            "passed": passed,
            "detail": detail,
            "seconds": round(time.monotonic() - t0, 3),
        })
    return {
        "scope": scope,
        "passed": all(c["passed"] for c in checks),
        "checks": checks,
    }


def render_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)
