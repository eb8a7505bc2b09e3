import math

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from conftest import floyd_warshall, graphs, isomorphic
from strongdim.families import complete, cycle, empty, path, star
from strongdim.graph import (
    INF,
    Graph,
    GraphError,
    complement,
    components,
    diameter,
    distance_matrix,
    has_true_twins,
    is_connected,
    remove_isolated,
    true_twins,
)
from strongdim.io import (
    FormatError,
    format_edgelist,
    format_graph6,
    parse_edgelist,
    parse_graph6,
)
from strongdim.products import disjoint_union


def test_graph_rejects_loops_and_asymmetry():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])


def test_from_matrix_roundtrip():
    g = cycle(5)
    assert Graph.from_matrix(g.adjacency_matrix()) == g


def test_complement_examples():
    assert complement(complete(4)) == empty(4)
    # P_4 is self-complementary: 2-0-3-1 is a path in the complement
    c = complement(path(4))
    assert c.edges() == [(0, 2), (0, 3), (1, 3)]
    assert isomorphic(c, path(4))


@given(graphs())
def test_complement_is_involution(g):
    assert complement(complement(g)) == g
    assert complement(g).m == g.n * (g.n - 1) // 2 - g.m


def test_distance_examples():
    assert distance_matrix(path(4))[0, 3] == 3
    assert distance_matrix(empty(2))[0, 1] == math.inf
    assert distance_matrix(cycle(6))[0, 3] == 3


def test_diameter_examples():
    assert diameter(complete(5)) == 1
    assert diameter(disjoint_union(complete(2), complete(1))) == INF
    assert diameter(path(5)) == 4
    with pytest.raises(GraphError):
        diameter(Graph(0, ()))


@settings(max_examples=150)
@given(graphs())
def test_distances_match_floyd_warshall(g):
    d = distance_matrix(g)
    assert np.array_equal(d, floyd_warshall(g))
    assert np.array_equal(d, d.T)
    if g.n:
        # d[u, w] <= d[u, v] + d[v, w], indexed (u, w, v)
        assert (d[:, :, None] <= d[:, None, :] + d.T[None, :, :]).all()


@given(graphs(min_n=2))
def test_infinite_diameter_iff_disconnected(g):
    assert (diameter(g) == INF) == (not is_connected(g))


def test_true_twins_examples():
    k = complete(5)
    assert all(true_twins(k, u, v) for u in range(5) for v in range(5) if u != v)
    assert not true_twins(star(2), 1, 2)
    assert not true_twins(path(4), 0, 3)
    with pytest.raises(GraphError):
        true_twins(k, 1, 1)


@given(graphs(min_n=1))
def test_true_twins_is_an_equivalence(g):
    rel = lambda u, v: u == v or true_twins(g, u, v)  # noqa: E731
    for u in g.vertices:
        for v in g.vertices:
            if rel(u, v):
                assert rel(v, u)
                for w in g.vertices:
                    if rel(v, w):
                        assert rel(u, w)


def test_remove_isolated():
    g, keep = remove_isolated(disjoint_union(complete(2), complete(1)))
    assert g == complete(2) and keep == (0, 1)
    g, keep = remove_isolated(empty(5))
    assert g.n == 0 and keep == ()
    assert remove_isolated(path(4))[0] == path(4)


def test_connectivity_and_components():
    assert is_connected(path(6))
    assert not is_connected(empty(2))
    assert components(empty(2)) == [[0], [1]]
    g = disjoint_union(complete(3), cycle(4))
    assert not is_connected(g)
    assert len(components(g)) == 2


@given(graphs())
def test_components_match_networkx(g):
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    expected = sorted(sorted(c) for c in nx.connected_components(nxg))
    assert components(g) == expected


def test_has_true_twins():
    assert has_true_twins(complete(2))
    assert not has_true_twins(path(4))


# io ---------------------------------------------------------------------------


def test_edgelist_tolerates_duplicates_and_reversed():
    g = parse_edgelist("3 3\n0 1\n1 0\n2 1\n")
    assert g.edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize("text, fragment", [
    ("3 1\n0 x\n", "line 2: non-integer"),
    ("3 1\n0 3\n", "line 2: vertex out of range"),
    ("3 1\n1 1\n", "line 2: loop"),
    ("3 2\n0 1\n", "header announces 2"),
    ("3\n", "line 1: header"),
])
def test_edgelist_errors_name_the_line(text, fragment):
    with pytest.raises(FormatError, match=fragment):
        parse_edgelist(text)


@given(graphs())
def test_edgelist_roundtrip(g):
    assert parse_edgelist(format_edgelist(g)) == g


@settings(max_examples=150)
@given(graphs(max_n=9))
def test_graph6_matches_networkx(g):
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    expected = nx.to_graph6_bytes(nxg, header=False).decode().strip()
    assert format_graph6(g) == expected
    assert parse_graph6(expected) == g
    assert parse_graph6(">>graph6<<" + expected) == g


def test_graph6_large_order():
    g = path(70)
    assert parse_graph6(format_graph6(g)) == g
