from itertools import combinations

import networkx as nx
import pytest
from hypothesis import assume, given, settings

from conftest import brute_alpha, brute_beta, brute_clique_cover, brute_omega, graphs
from strongdim.families import (
    complete,
    cycle,
    empty,
    fan,
    nonisomorphic_graphs,
    path,
    random_graph,
    random_tree,
    star,
    wheel,
)
from strongdim.graph import GraphError, complement, is_connected
from strongdim.products import cartesian_sum, disjoint_union, strong_product
from strongdim.solvers import (
    bruteforce_basis,
    chromatic_number,
    clique_cover_number,
    clique_number,
    independence_number,
    invariants,
    is_c_graph,
    is_strong_metric_generator,
    is_twins_free_clique,
    is_vertex_cover,
    strong_metric_dimension,
    strong_metric_dimension_bruteforce,
    twins_free_clique_number,
    universal_vertex_exists_outside,
    varpi_bruteforce,
    varpi_set_search,
    vertex_cover_number,
)


def brute_varpi(g):
    for k in range(g.n, 0, -1):
        for s in combinations(range(g.n), k):
            if all(g.has_edge(u, v) and g.closed_mask(u) != g.closed_mask(v)
                   for u, v in combinations(s, 2)):
                return k
    return 0


def test_independence_examples():
    assert independence_number(cycle(6)).value == 3
    assert independence_number(complete(5)).value == 1
    p = strong_product(path(4), path(4))
    assert independence_number(p).value == 4 == brute_alpha(p)


@settings(max_examples=200)
@given(graphs(max_n=9))
def test_clique_and_independence_against_enumeration(g):
    w, a = clique_number(g), independence_number(g)
    assert w.value == brute_omega(g)
    assert a.value == brute_alpha(g)
    assert g.is_clique(w.witness) and len(w.witness) == w.value
    assert g.is_independent(a.witness) and len(a.witness) == a.value
    assert list(w.witness) == sorted(w.witness)


def test_vertex_cover_examples():
    assert vertex_cover_number(path(4)).value == 2 == brute_beta(path(4))
    assert vertex_cover_number(complete(6)).value == 5


def test_gallai_on_random_graphs():
    for seed in range(200):
        g = random_graph(3 + seed % 10, 0.45, seed)
        a, b = independence_number(g), vertex_cover_number(g)
        assert a.value + b.value == g.n
        assert is_vertex_cover(g, b.witness)


@given(graphs(max_n=8))
def test_vertex_cover_against_enumeration(g):
    assert vertex_cover_number(g).value == brute_beta(g)


def test_clique_examples():
    assert clique_number(wheel(5)).value == 3
    assert clique_number(empty(6)).value == 1
    s = cartesian_sum(cycle(5), path(4))
    nx_omega = max(len(c) for c in nx.find_cliques(nx.Graph(s.edges())))
    assert clique_number(s).value == 4 == nx_omega


def test_clique_on_dense_product_matches_networkx():
    s = cartesian_sum(random_graph(8, 0.5, 3), random_graph(7, 0.4, 4))
    nx_omega = max(len(c) for c in nx.find_cliques(nx.Graph(s.edges())))
    assert clique_number(s).value == nx_omega


def test_twins_free_clique_examples():
    assert twins_free_clique_number(complete(5)).value == 1
    for n in range(3, 10):
        assert twins_free_clique_number(random_tree(n, n)).value == 2
    # K_2 is the tree of order 2; its two vertices are true twins
    assert twins_free_clique_number(path(2)).value == 1
    assert twins_free_clique_number(fan(4)).value == 3
    # hub and path centre of F_{1,3} are true twins
    assert twins_free_clique_number(fan(3)).value == 2
    with pytest.raises(GraphError):
        twins_free_clique_number(empty(1).induced([]))


@settings(max_examples=200)
@given(graphs(min_n=1, max_n=9))
def test_twins_free_clique_against_enumeration(g):
    tf = twins_free_clique_number(g)
    assert tf.value == brute_varpi(g) == varpi_bruteforce(g)
    assert is_twins_free_clique(g, tf.witness)
    assert clique_number(g).value >= tf.value >= 1


def test_strong_metric_generator_examples():
    assert is_strong_metric_generator(path(4), [0])
    assert not is_strong_metric_generator(cycle(4), [0])
    for g in (path(5), cycle(5), wheel(5), random_tree(8, 1)):
        assert is_strong_metric_generator(g, g.vertices)
    with pytest.raises(GraphError):
        is_strong_metric_generator(empty(2), [0])


def test_strong_metric_dimension_examples():
    for n in range(2, 9):
        assert strong_metric_dimension(path(n)).value == 1 == strong_metric_dimension_bruteforce(path(n))
    for n in range(2, 7):
        assert strong_metric_dimension(complete(n)).value == n - 1 == strong_metric_dimension_bruteforce(complete(n))
    assert strong_metric_dimension(cartesian_sum(path(4), path(4))).value == 12


def test_strong_metric_dimension_errors():
    with pytest.raises(GraphError):
        strong_metric_dimension(disjoint_union(path(2), path(2)))
    with pytest.raises(GraphError):
        strong_metric_dimension(complete(1))
    with pytest.raises(GraphError):
        strong_metric_dimension_bruteforce(empty(3))
    with pytest.raises(GraphError):
        strong_metric_dimension_bruteforce(path(15))


def test_bruteforce_examples():
    assert strong_metric_dimension_bruteforce(cycle(4)) == 2
    assert strong_metric_dimension_bruteforce(complete(4)) == 3


def test_bruteforce_guard_env_override(monkeypatch):
    monkeypatch.setenv("STRONGDIM_MAX_N", "15")
    assert strong_metric_dimension_bruteforce(path(15)) == 1


def test_reduction_equals_bruteforce_up_to_six_vertices():
    for n in range(2, 7):
        for g in nonisomorphic_graphs(n, connected=True):
            red = strong_metric_dimension(g)
            assert red.value == strong_metric_dimension_bruteforce(g)
            assert is_strong_metric_generator(g, red.witness)


@settings(max_examples=60)
@given(graphs(min_n=2, max_n=8))
def test_generator_witness_valid(g):
    assume(is_connected(g))
    ds = strong_metric_dimension(g)
    assert len(ds.witness) == ds.value
    assert is_strong_metric_generator(g, ds.witness)
    assert len(bruteforce_basis(g)) == ds.value


def test_c_graph_examples():
    assert is_c_graph(complete(5))
    assert is_c_graph(cycle(6))
    assert is_c_graph(complement(cycle(6)))
    assert not is_c_graph(cycle(5))
    assert brute_clique_cover(cycle(5)) == 3 and brute_alpha(cycle(5)) == 2


@settings(max_examples=120)
@given(graphs(min_n=1, max_n=7))
def test_clique_cover_against_partitions(g):
    assert clique_cover_number(g) == brute_clique_cover(g)
    assert is_c_graph(g) == (brute_clique_cover(g) == brute_alpha(g))


@given(graphs(min_n=1, max_n=8))
def test_chromatic_number_against_networkx_bound(g):
    chi = chromatic_number(g)
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    greedy = max(nx.greedy_color(nxg, strategy="DSATUR").values(), default=-1) + 1
    assert clique_number(g).value <= chi <= greedy


def test_varpi_set_search_examples():
    assert varpi_set_search(path(4)) is not None
    assert set(varpi_set_search(path(4))) <= {0, 1, 2, 3}
    assert varpi_set_search(star(3)) is None
    assert varpi_set_search(fan(3)) is None
    assert varpi_set_search(fan(3), avoid_universal=False) is not None


@given(graphs(min_n=1, max_n=8))
def test_varpi_set_search_against_enumeration(g):
    target = brute_varpi(g)
    universal = {v for v in g.vertices if g.degree(v) == g.n - 1}
    expect = any(
        is_twins_free_clique(g, s) and not universal & set(s)
        for s in combinations(g.vertices, target)
    )
    found = varpi_set_search(g)
    assert (found is not None) == expect
    if found is not None:
        assert len(found) == target and is_twins_free_clique(g, found)
        assert universal_vertex_exists_outside(g, found)


def test_universal_vertex_exists_outside():
    s = star(3)
    assert universal_vertex_exists_outside(s, [1, 2])
    assert not universal_vertex_exists_outside(s, [0, 1])


def test_invariant_bundle_wheel():
    bundle = invariants(wheel(5))
    assert bundle.as_dict() == {"alpha": 2, "beta": 4, "omega": 3, "varpi": 3, "diameter": 2, "dim_s": 3}
    assert brute_alpha(wheel(5)) == 2


def test_invariant_bundle_disconnected():
    bundle = invariants(disjoint_union(complete(2), complete(1)))
    assert bundle.dim_s is None
    assert bundle.as_dict()["diameter"] == "inf"
