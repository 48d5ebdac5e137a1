import pytest
from hypothesis import given, strategies as st

from tests.conftest import graph_and_vertex, graphs
from vmcalc import enumeration as en
from vmcalc.equivalence import (
    are_locally_equivalent,
    check_reduction_triple,
    classify_vertex,
    is_pivot_equivalent_to_even_cycle,
    local_orbit,
    locally_equivalent_cycle_length,
    non_essential_vertices,
    non_pivotal_vertices,
    orbit_prime_invariant,
    pivot_orbit,
)
from vmcalc.graph import Graph, is_bipartite, is_prime, local_complement
from vmcalc.theta import build_theta


def test_trivial_orbits():
    assert len(local_orbit(Graph.empty(4))) == 1
    assert len(pivot_orbit(Graph.empty(4))) == 1


def test_triangle_orbit():
    K3 = Graph.complete(3)
    paths = {Graph(range(3), [(a, b), (b, c)]) for a, b, c in ((1, 0, 2), (0, 1, 2), (0, 2, 1))}
    assert local_orbit(K3).members == frozenset(paths | {K3})


def test_c5_orbit_has_no_bipartite_member(c5):
    orbit = local_orbit(c5)
    assert len(orbit) == 132
    assert not any(is_bipartite(g) for g in orbit.members)


def test_pivot_orbits():
    assert Graph.cycle(4).relabel({0: 0, 1: 2, 2: 1, 3: 3}) in pivot_orbit(Graph.path(4))
    C6 = Graph.cycle(6)
    assert pivot_orbit(C6).members <= local_orbit(C6).members


def test_cycle_lengths():
    assert locally_equivalent_cycle_length(Graph.cycle(7)) == 7
    assert locally_equivalent_cycle_length(build_theta((1, 3, 3))) == 6
    assert locally_equivalent_cycle_length(build_theta((3, 3, 3))) is None


def test_pivot_equivalent_even_cycle():
    assert is_pivot_equivalent_to_even_cycle(Graph.cycle(6))
    assert is_pivot_equivalent_to_even_cycle(Graph.cycle(4))
    assert not is_pivot_equivalent_to_even_cycle(Graph.cycle(5))
    assert not is_pivot_equivalent_to_even_cycle(build_theta((2, 3, 3)))


@pytest.mark.parametrize("n", [5, 6, 7])
def test_cycle_vertices_are_fully_essential(n):
    C = Graph.cycle(n)
    for v in C.vertices:
        cls = classify_vertex(C, v)
        assert not cls.prime_delete and not cls.prime_contract
        # C_n * v minus v is the cycle C_(n-1), prime once n - 1 >= 5
        assert cls.prime_star_delete == (n >= 6)
        assert not cls.non_essential
    assert non_essential_vertices(C) == frozenset()
    assert non_pivotal_vertices(C) == frozenset()


def test_common_neighbor_of_theta():
    # theta(2, 3, 3): vertex 2 is the midpoint of the length-2 path
    G = build_theta((2, 3, 3))
    cls = classify_vertex(G, 2)
    assert cls.prime_delete and cls.prime_star_delete


def test_theta_non_essential_counts():
    assert len(non_essential_vertices(build_theta((2, 3, 3)))) == 3
    assert len(non_essential_vertices(build_theta((1, 4, 5)))) == 2


@given(graphs(min_n=5, max_n=7))
def test_adjacent_degree_two_vertices_are_essential(G):
    for v in G.vertices:
        for w in G.neighbors(v):
            if G.degree(v) == 2 and G.degree(w) == 2:
                assert sum(classify_vertex(G, v)) <= 1


@given(graphs(max_n=7))
def test_non_essential_within_non_pivotal(G):
    assert non_essential_vertices(G) <= non_pivotal_vertices(G)


def test_prime_bipartite_sets_agree():
    codes = en.prime_table(6).nonzero()[0]
    seen = 0
    for code in codes:
        G = en.graph_from_code(6, int(code))
        if is_bipartite(G):
            seen += 1
            assert non_pivotal_vertices(G) == non_essential_vertices(G)
    assert seen == 240


@given(graph_and_vertex(max_n=6), st.data())
def test_reduction_triple(gv, data):
    G, v = gv
    w = data.draw(st.sampled_from(G.vertices))
    assert check_reduction_triple(G, v, w)


@given(graph_and_vertex(max_n=6))
def test_orbit_membership(gv):
    G, v = gv
    H = local_complement(G, v)
    assert are_locally_equivalent(G, H)
    assert orbit_prime_invariant(local_orbit(G))


@given(graph_and_vertex(min_n=5, max_n=6))
def test_non_essential_set_is_local_invariant(gv):
    G, v = gv
    if is_prime(G):
        assert non_essential_vertices(local_complement(G, v)) == non_essential_vertices(G)


def test_not_equivalent_across_orders():
    assert not are_locally_equivalent(Graph.cycle(5), Graph.cycle(6))
    assert not are_locally_equivalent(Graph.cycle(6), build_theta((3, 3, 1)).induced(range(6)))
