from itertools import combinations, permutations

import numpy as np
import pytest
from hypothesis import strategies as st

from strongdim.graph import Graph


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, (e for e, keep in zip(pairs, mask) if keep))


# independent oracles -------------------------------------------------------


def floyd_warshall(g: Graph) -> np.ndarray:
    d = np.full((g.n, g.n), np.inf)
    np.fill_diagonal(d, 0)
    for u, v in g.edges():
        d[u, v] = d[v, u] = 1
    for k in range(g.n):
        d = np.minimum(d, d[:, [k]] + d[[k], :])
    return d


def brute_alpha(g: Graph) -> int:
    for k in range(g.n, -1, -1):
        for s in combinations(range(g.n), k):
            if all(not g.has_edge(u, v) for u, v in combinations(s, 2)):
                return k
    return 0


def brute_omega(g: Graph) -> int:
    for k in range(g.n, -1, -1):
        for s in combinations(range(g.n), k):
            if all(g.has_edge(u, v) for u, v in combinations(s, 2)):
                return k
    return 0


def brute_beta(g: Graph) -> int:
    edges = g.edges()
    for k in range(g.n + 1):
        for s in combinations(range(g.n), k):
            ss = set(s)
            if all(u in ss or v in ss for u, v in edges):
                return k
    raise AssertionError


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def brute_clique_cover(g: Graph) -> int:
    best = g.n
    for part in set_partitions(list(range(g.n))):
        if len(part) < best and all(
            all(g.has_edge(u, v) for u, v in combinations(block, 2)) for block in part
        ):
            best = len(part)
    return best


def isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    eh = set(map(frozenset, h.edges()))
    for perm in permutations(range(g.n)):
        if all(frozenset((perm[u], perm[v])) in eh for u, v in g.edges()):
            return True
    return False


def edge_set(g: Graph) -> set:
    return set(map(frozenset, g.edges()))


@pytest.fixture
def tmp_el(tmp_path):
    def write(g, name="g.el"):
        from strongdim.io import write_edgelist

        p = tmp_path / name
        write_edgelist(g, p)
        return str(p)

    return write
