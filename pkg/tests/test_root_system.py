import pytest

from rmx import root_system as rs


def test_a2_cartan_matrix():
    cd = rs.build_cartan("A", 2)
    assert cd.cartan == ((2, -1), (-1, 2))


def test_d4_adjacency():
    cd = rs.build_cartan("D", 4)
    assert set(cd.edges) == {(1, 2), (2, 3), (2, 4)}


def test_e6_adjacency():
    cd = rs.build_cartan("E", 6)
    assert set(cd.edges) == {(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)}


@pytest.mark.parametrize("family,rank", [("A", 0), ("D", 3), ("E", 5), ("E", 9)])
def test_invalid_ranks_rejected(family, rank):
    with pytest.raises(rs.InvalidTypeError):
        rs.build_cartan(family, rank)


def test_a2_positive_roots():
    cd = rs.build_cartan("A", 2)
    assert set(rs.positive_roots(cd)) == {(1, 0), (0, 1), (1, 1)}


@pytest.mark.parametrize("family,rank,count", [("D", 4, 12), ("E", 8, 120)])
def test_positive_root_counts(family, rank, count):
    cd = rs.build_cartan(family, rank)
    roots = rs.positive_roots(cd)
    assert len(roots) == count
    assert len(roots) == rank * cd.h // 2


def test_positive_roots_sorted_and_deterministic():
    cd = rs.build_cartan("D", 5)
    roots = rs.positive_roots(cd)
    assert list(roots) == sorted(roots)
    assert roots == rs.positive_roots(rs.build_cartan("D", 5))


def test_simple_reflection_examples():
    cd = rs.build_cartan("A", 2)
    a1 = rs.simple_root(cd, 1)
    a2 = rs.simple_root(cd, 2)
    assert rs.reflect(cd, 1, a1) == (-1, 0)
    assert rs.reflect(cd, 1, a2) == (1, 1)


def test_simple_reflection_is_involutive():
    cd = rs.build_cartan("D", 4)
    for i in cd.vertices:
        for v in rs.positive_roots(cd):
            assert rs.reflect(cd, i, rs.reflect(cd, i, v)) == v


def test_reflection_closure_of_positive_roots():
    cd = rs.build_cartan("D", 4)
    pos = set(rs.positive_roots(cd))
    for alpha in pos:
        for i in cd.vertices:
            w = rs.reflect(cd, i, alpha)
            neg_simple = tuple(-c for c in rs.simple_root(cd, i))
            assert w in pos or w == neg_simple


@pytest.mark.parametrize(
    "family,rank,h",
    [("A", 1, 2), ("A", 4, 5), ("D", 4, 6), ("D", 7, 12),
     ("E", 6, 12), ("E", 7, 18), ("E", 8, 30)],
)
def test_coxeter_numbers(family, rank, h):
    cd = rs.build_cartan(family, rank)
    assert cd.h == rs.coxeter_number(cd) == h
    assert rs.star_involution(cd, 1) == cd.star_of(1)


def test_star_involution_values():
    assert rs.build_cartan("A", 3).star_of(1) == 3
    assert rs.build_cartan("D", 5).star_of(4) == 5
    assert rs.build_cartan("D", 4).star_of(3) == 3
    assert rs.build_cartan("E", 6).star_of(5) == 1
    assert rs.build_cartan("E", 7).star == tuple(range(1, 8))


def test_star_is_involution_and_preserves_adjacency():
    for family, rank in rs.all_ade_types(8):
        cd = rs.build_cartan(family, rank)
        for i in cd.vertices:
            assert cd.star_of(cd.star_of(i)) == i
        for u, v in cd.edges:
            su, sv = cd.star_of(u), cd.star_of(v)
            assert (min(su, sv), max(su, sv)) in set(cd.edges)


def test_parity_alternates_on_edges():
    for family, rank in rs.all_ade_types(8):
        for base in (0, 1):
            cd = rs.build_cartan(family, rank, parity_base=base)
            assert cd.eps_of(1) == base
            for u, v in cd.edges:
                assert cd.eps_of(u) != cd.eps_of(v)


def test_parity_base_flips_everything():
    a = rs.build_cartan("D", 5, parity_base=0)
    b = rs.build_cartan("D", 5, parity_base=1)
    assert all(x != y for x, y in zip(a.eps, b.eps))
    assert a.cartan == b.cartan and a.star == b.star and a.h == b.h
