import pytest

from rmx import ar_quiver as ar
from rmx import denominators as dn
from rmx import root_system as rs
from rmx import schur_weyl as sw
from rmx.denominators import Monomial


def test_gamma_window_a2():
    # window [-1, 3]: every arrow demanded by the Ext table, including the
    # two landing on (2,-1)
    cd = rs.build_cartan("A", 2)
    win = sw.gamma_window(cd, -1, 3)
    assert win.vertices == ((1, 0), (1, 2), (2, -1), (2, 1), (2, 3))
    assert set(win.arrows) == {
        ((1, 2), (1, 0), 1),
        ((1, 2), (2, -1), 1),
        ((2, 1), (2, -1), 1),
        ((2, 3), (1, 0), 1),
        ((2, 3), (2, 1), 1),
    }


def test_gamma_window_a1_chain():
    cd = rs.build_cartan("A", 1)
    win = sw.gamma_window(cd, 0, 4)
    assert win.vertices == ((1, 0), (1, 2), (1, 4))
    assert win.arrows == (((1, 2), (1, 0), 1), ((1, 4), (1, 2), 1))


def test_gamma_window_is_acyclic():
    cd = rs.build_cartan("D", 4)
    win = sw.gamma_window(cd, -6, 6)
    for u, v, _ in win.arrows:
        assert u[1] > v[1]
    assert sw.gamma_window(cd, 3, 2).vertices == ()


def test_gamma_j_is_full_subquiver_of_window():
    cd = rs.build_cartan("A", 3)
    Q = ar.monotone_quiver(cd)
    fam = sw.type_a_family(cd, Q, ar.default_height(Q, -2), 4, -2, 2)
    ps = [p for _, p in fam.image]
    win = sw.gamma_window(cd, min(ps), max(ps))
    gj = sw.gamma_J(cd, fam)
    for j in fam.domain:
        for jp in fam.domain:
            assert gj.arrow_mult(j, jp) == win.arrow_mult(fam.of(j), fam.of(jp))


def test_gamma_arrows_equal_pole_orders():
    cd = rs.build_cartan("A", 3)
    win = sw.gamma_window(cd, -4, 4)
    for u in win.vertices:
        for v in win.vertices:
            assert win.arrow_mult(u, v) == dn.pole_order(cd, v, u)


def test_family_map_validation():
    with pytest.raises(ValueError):
        sw.FamilyMap(j_lo=0, j_hi=1, image=((1, 0), (1, 0)))
    with pytest.raises(ValueError):
        sw.FamilyMap(j_lo=0, j_hi=2, image=((1, 0), (1, 2)))


def test_gamma_j_single_vertex():
    cd = rs.build_cartan("A", 2)
    fam = sw.FamilyMap(j_lo=5, j_hi=5, image=((1, 0),))
    win = sw.gamma_J(cd, fam)
    assert win.vertices == (5,) and win.arrows == ()
    assert sw.verify_a_infinity(cd, fam)


def test_type_a_family_closed_form():
    for n in range(1, 6):
        cd = rs.build_cartan("A", n)
        Q = ar.monotone_quiver(cd)
        fam = sw.type_a_family(cd, Q, ar.default_height(Q, -2), n + 1, -8, 8)
        assert all(fam.of(j) == (1, -2 * j) for j in fam.domain)
        assert sw.verify_a_infinity(cd, fam)


def test_type_d_family_closed_form():
    for n in (4, 5):
        cd = rs.build_cartan("D", n)
        Q = ar.monotone_quiver(cd)
        h = cd.h
        star = cd.star_of(n - 1)
        assert star == (n - 1 if n % 2 == 0 else n)
        fam = sw.type_a_family(cd, Q, ar.default_height(Q, -2), n, -8, 8)
        for j in fam.domain:
            i = (j - 1) % n + 1
            k = (j - i) // n
            if i <= n - 2:
                assert fam.of(j) == (1, -2 * i - 2 * k * h)
            elif i == n - 1:
                assert fam.of(j) == (star, -3 * n + 4 - 2 * k * h)
            else:
                assert fam.of(j) == (star, -n - h - 2 * k * h)
        assert sw.verify_a_infinity(cd, fam)


def test_type_e_family_closed_form():
    for n in (6, 7, 8):
        cd = rs.build_cartan("E", n)
        Q = ar.monotone_quiver(cd)
        h = cd.h
        star = cd.star_of(n - 1)
        assert star == (1 if n == 6 else n - 1)
        fam = sw.type_a_family(cd, Q, ar.default_height(Q, -2), n, -8, 8)
        for j in fam.domain:
            i = (j - 1) % n + 1
            k = (j - i) // n
            if i <= 3:
                assert fam.of(j) == (1, -2 * i - 2 * k * h)
            else:
                assert fam.of(j) == (star, n - h - 2 * i - 2 * k * h)
        assert sw.verify_a_infinity(cd, fam)


def test_a_infinity_for_all_required_configurations():
    configs = [("A", n, n + 1) for n in range(1, 9)]
    configs += [("D", 4, 4), ("D", 5, 5), ("E", 6, 6), ("E", 7, 7), ("E", 8, 8)]
    for family, rank, N in configs:
        cd = rs.build_cartan(family, rank)
        Q = ar.monotone_quiver(cd)
        fam = sw.type_a_family(cd, Q, ar.default_height(Q, -2), N, -8, 8)
        assert sw.verify_a_infinity(cd, fam), (family, rank)


def test_scrambled_family_fails_a_infinity():
    cd = rs.build_cartan("A", 3)
    Q = ar.monotone_quiver(cd)
    fam = sw.type_a_family(cd, Q, ar.default_height(Q, -2), 4, -2, 2)
    scrambled = sw.FamilyMap(j_lo=-2, j_hi=2, image=tuple(reversed(fam.image)))
    assert not sw.verify_a_infinity(cd, scrambled)


def test_type_a_family_preconditions():
    cd = rs.build_cartan("A", 3)
    backwards = ar.orient(cd, [(2, 1), (3, 2)])
    with pytest.raises(ValueError):
        sw.type_a_family(cd, backwards, ar.default_height(backwards), 4, 0, 3)
    Q = ar.monotone_quiver(cd)
    with pytest.raises(ValueError):
        sw.type_a_family(cd, Q, ar.default_height(Q, -2), 9, 0, 3)
    cde = rs.build_cartan("E", 6)
    Qe = ar.monotone_quiver(cde)
    with pytest.raises(ValueError):
        # vertices 1..6 of E6 are not a path (branch at 3)
        sw.type_a_family(cde, Qe, ar.default_height(Qe, -2), 7, 0, 3)


def test_kostant_partition_examples():
    two = sw.kostant_partitions({0: 1, 1: 1}, None)
    assert len(two) == 2
    assert sw.KostantPartition(nu=(((0, 2), 1),)) in two
    assert sw.KostantPartition(nu=(((0, 1), 1), ((1, 1), 1))) in two
    assert len(sw.kostant_partitions({0: 1}, 1)) == 1
    assert len(sw.kostant_partitions({0: 1, 1: 1}, 1)) == 1
    assert sw.kostant_partitions({}, None) == [sw.KostantPartition(nu=())]


def test_kostant_partition_weights():
    kps = sw.kostant_partitions({0: 2, 1: 2, 2: 1}, 3)
    for kp in kps:
        assert kp.beta() == {0: 2, 1: 2, 2: 1}
        assert kp.weight() == 5
    assert len(kps) == len(set(kps))


def test_x_of_root_examples():
    cd = rs.build_cartan("A", 2)
    Q = ar.orient(cd, [(1, 2)])
    xi = (-2, -3)
    assert sw.x_of_root(cd, Q, xi, 3, 1, 1) == (1, -2)
    assert sw.x_of_root(cd, Q, xi, 3, 0, 3) is sw.ZERO
    fam = sw.type_a_family(cd, Q, xi, 3, -4, 4)
    for j in fam.domain:
        assert sw.x_of_root(cd, Q, xi, 3, j, 1) == fam.of(j)
    # the length-2 interval at j=1 lands on the top interval module
    x = sw.x_of_root(cd, Q, xi, 3, 1, 2)
    assert ar.happel_object(Q, xi, x) == ar.IndecObject((1, 1), 0)
    with pytest.raises(ValueError):
        sw.x_of_root(cd, Q, xi, 3, 0, 4)


def test_m_nu_examples():
    cd = rs.build_cartan("A", 2)
    Q = ar.orient(cd, [(1, 2)])
    xi = (-2, -3)
    assert sw.m_nu(cd, Q, xi, 3, sw.delta_partition(0, 3)) == Monomial.unit()
    fam = sw.type_a_family(cd, Q, xi, 3, -4, 4)
    assert sw.m_nu(cd, Q, xi, 3, sw.delta_partition(0, 1)) == Monomial.y(*fam.of(0))
    x = sw.x_of_root(cd, Q, xi, 3, 1, 2)
    assert sw.m_nu(cd, Q, xi, 3, sw.delta_partition(1, 2)) == Monomial.y(*x)


def test_orbit_census_example():
    census = sw.orbit_census({0: 1, 1: 1}, 2)
    assert len(census) == 2
    dims = {kp.nu: d for kp, d in census}
    assert dims[(((0, 2), 1),)] == 1
    assert dims[(((0, 1), 1), ((1, 1), 1))] == 0
    assert len(set(dims.values())) == 2
    open_orbit = max(census, key=lambda t: t[1])[0]
    assert open_orbit.parts() == 1


def test_orbit_census_counts():
    for beta in ({0: 2, 1: 1}, {0: 1, 1: 2, 2: 1}, {0: 3}):
        census = sw.orbit_census(beta, 4)
        assert len(census) == len(sw.kostant_partitions(beta, 4))
        for kp, d in census:
            assert d >= 0
