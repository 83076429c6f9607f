from fractions import Fraction

import pytest

from rmx import ar_quiver as ar
from rmx import quantum_cartan as qc
from rmx import root_system as rs


def test_a1_series_by_hand():
    cd = rs.build_cartan("A", 1)
    t = qc.ctilde_table(cd, 6)
    assert t.series(1, 1) == (1, 0, -1, 0, 1, 0)


def test_a2_offdiagonal_series_by_hand():
    cd = rs.build_cartan("A", 2)
    t = qc.ctilde_table(cd, 6)
    assert t.series(1, 2) == (0, 1, 0, -1, 0, 0)


def test_base_case_is_kronecker_delta():
    for family, rank in [("A", 3), ("D", 4), ("E", 6)]:
        cd = rs.build_cartan(family, rank)
        t = qc.ctilde_table(cd, 2)
        for i in cd.vertices:
            for j in cd.vertices:
                assert t.value(i, j, 1) == (1 if i == j else 0)


def _poly_series_quotient(num, den, order):
    """Coefficients of num(z)/den(z) as a power series, exactly."""
    num = list(num) + [0] * (order + 1 - len(num))
    den = list(den)
    assert den[0] != 0
    out = []
    state = [Fraction(x) for x in num[: order + 1]]
    for k in range(order + 1):
        c = state[k] / den[0]
        out.append(c)
        for t in range(len(den)):
            if k + t <= order:
                state[k + t] -= c * den[t]
    return out


def test_a1_against_direct_rational_inversion():
    # inverse of z + 1/z is z / (1 + z^2)
    cd = rs.build_cartan("A", 1)
    t = qc.ctilde_table(cd, 12)
    series = _poly_series_quotient([0, 1], [1, 0, 1], 12)
    for l in range(1, 13):
        assert Fraction(t.value(1, 1, l)) == series[l]


def test_a2_against_direct_rational_inversion():
    # cofactor inversion: diagonal (z^3 + z)/(z^4 + z^2 + 1),
    # off-diagonal z^2/(z^4 + z^2 + 1)
    cd = rs.build_cartan("A", 2)
    t = qc.ctilde_table(cd, 12)
    diag = _poly_series_quotient([0, 1, 0, 1], [1, 0, 1, 0, 1], 12)
    off = _poly_series_quotient([0, 0, 1], [1, 0, 1, 0, 1], 12)
    for l in range(1, 13):
        assert Fraction(t.value(1, 1, l)) == diag[l]
        assert Fraction(t.value(1, 2, l)) == off[l]


def test_identity_suite_empty_for_small_types():
    for family, rank in [("A", 1), ("A", 2), ("A", 5), ("D", 4), ("E", 6)]:
        cd = rs.build_cartan(family, rank)
        assert qc.check_ctilde_identities(qc.ctilde_table(cd, 2 * cd.h)) == []


def test_identity_instances_from_hand_tables():
    cd1 = rs.build_cartan("A", 1)
    t1 = qc.ctilde_table(cd1, 4)
    assert t1.value(1, 1, 2) == 0 and t1.value(1, 1, 4) == 0  # ct(kh) = 0
    cd2 = rs.build_cartan("A", 2)
    t2 = qc.ctilde_table(cd2, 6)
    assert t2.value(1, 1, 1) == t2.value(1, 2, 2) == 1  # ct_ij(l) = ct_(j,i*)(h-l)


def test_table_too_short_raises():
    cd = rs.build_cartan("A", 2)
    with pytest.raises(ValueError):
        qc.check_ctilde_identities(qc.ctilde_table(cd, 5))


def test_coxeter_formula_examples():
    cd = rs.build_cartan("A", 2)
    Q = ar.orient(cd, [(2, 1)])
    xi = (0, 1)
    assert qc.ctilde_coxeter(cd, Q, xi, 1, 1, 1) == 1
    assert qc.ctilde_coxeter(cd, Q, xi, 2, 2, 1) == 1
    # l + eps_i + eps_j + 1 odd forces zero
    assert qc.ctilde_coxeter(cd, Q, xi, 1, 1, 2) == 0
    assert qc.ctilde_coxeter(cd, Q, xi, 1, 2, 1) == 0
    with pytest.raises(ValueError):
        qc.ctilde_coxeter(cd, Q, xi, 1, 1, 0)


@pytest.mark.parametrize("family,rank", [("A", 3), ("D", 4), ("D", 5), ("E", 6)])
def test_dual_method_agreement(family, rank):
    for parity in (0, 1):
        cd = rs.build_cartan(family, rank, parity_base=parity)
        table = qc.ctilde_table(cd, 2 * cd.h)
        quivers = [
            ar.monotone_quiver(cd),
            ar.sink_source_quiver(cd),
            ar.random_orientation(cd, seed=3),
        ]
        for Q in quivers:
            xi = ar.default_height(Q)
            for i in cd.vertices:
                for j in cd.vertices:
                    for l in range(1, 2 * cd.h + 1):
                        assert table.value(i, j, l) == qc.ctilde_coxeter(
                            cd, Q, xi, i, j, l
                        ), (family, rank, parity, Q.label(), i, j, l)


def test_table_independent_of_parity_choice():
    for family, rank in [("A", 4), ("D", 4), ("E", 6)]:
        t0 = qc.ctilde_table(rs.build_cartan(family, rank, parity_base=0))
        t1 = qc.ctilde_table(rs.build_cartan(family, rank, parity_base=1))
        assert t0.values == t1.values


def test_rational_inversion_residual_within_bound():
    for family, rank in [("A", 2), ("D", 4)]:
        cd = rs.build_cartan(family, rank)
        resid, bound = qc.rational_inversion_residual(cd, 4 * cd.h, Fraction(1, 5))
        assert 0 <= resid <= bound


def test_rational_inversion_rejects_bad_input():
    cd = rs.build_cartan("A", 2)
    with pytest.raises(ValueError):
        qc.rational_inversion_residual(cd, 4 * cd.h, Fraction(1, 2))
    with pytest.raises(ValueError):
        qc.rational_inversion_residual(cd, cd.h, Fraction(1, 5))


def test_periodic_accessor_matches_long_table():
    cd = rs.build_cartan("A", 3)
    long = qc.ctilde_table(cd, 6 * cd.h)
    for l in range(1, 6 * cd.h + 1):
        assert qc.ctilde(cd, 1, 2, l) == long.value(1, 2, l)
