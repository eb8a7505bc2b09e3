"""Mutually maximally distant pairs, boundary and strong resolving graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, distances, iter_bits, true_twins


@dataclass(frozen=True)
class DerivedGraph:
    """A graph built from a parent; ``vertex_map[i]`` is the parent id of vertex ``i``."""

    graph: Graph
    vertex_map: tuple[int, ...]

    def to_parent(self, vertices) -> list[int]:
        return sorted(self.vertex_map[v] for v in vertices)


def is_maximally_distant(g: Graph, u: int, v: int) -> bool:
    """True when no neighbour of ``u`` is farther from ``v`` than ``u`` is.

    Vertices in different components compare as ``inf <= inf`` and are
    therefore maximally distant.
    """
    if u == v:
        raise GraphError("maximal distance needs two distinct vertices")
    d = distances(g)
    return g.adj[u] & ~d.within(v, d(u, v)) == 0


def _mmd_adjacency(g: Graph) -> tuple[int, ...]:
    d = distances(g)
    adj = [0] * g.n
    for u in g.vertices:
        for v in range(u + 1, g.n):
            duv = d(u, v)
            if g.adj[u] & ~d.within(v, duv) == 0 and g.adj[v] & ~d.within(u, duv) == 0:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return tuple(adj)


_mmd_cache: dict[Graph, tuple[int, ...]] = {}


def mmd_adjacency(g: Graph) -> tuple[int, ...]:
    """Bitset adjacency of the MMD relation on all of ``V(g)``."""
    res = _mmd_cache.get(g)
    if res is None:
        if len(_mmd_cache) > 50_000:
            _mmd_cache.clear()
        res = _mmd_cache[g] = _mmd_adjacency(g)
    return res


def mmd_pairs(g: Graph) -> set[frozenset[int]]:
    adj = mmd_adjacency(g)
    return {frozenset((u, v)) for u in g.vertices for v in iter_bits(adj[u]) if u < v}


def boundary(g: Graph) -> list[int]:
    return [v for v, nb in enumerate(mmd_adjacency(g)) if nb]


def _restrict(adj: tuple[int, ...], keep: tuple[int, ...]) -> DerivedGraph:
    return DerivedGraph(Graph(len(adj), adj).induced(keep), keep)


def strong_resolving_graph(g: Graph) -> DerivedGraph:
    """MMD pairs as edges, on the boundary only (isolated vertices dropped)."""
    adj = mmd_adjacency(g)
    keep = tuple(v for v in g.vertices if adj[v])
    return _restrict(adj, keep)


def tf_strong_resolving_graph(g: Graph) -> DerivedGraph:
    """MMD pairs that are not true twins, on the vertices they touch.

    A complete graph yields the graph on zero vertices.
    """
    mmd = mmd_adjacency(g)
    adj = []
    for u in g.vertices:
        cu = g.closed_mask(u)
        adj.append(sum(1 << w for w in iter_bits(mmd[u]) if g.closed_mask(w) != cu))
    adj = tuple(adj)
    keep = tuple(v for v in g.vertices if adj[v])
    return _restrict(adj, keep)


def star_closure(g: Graph) -> Graph:
    """Join ``u, v`` when ``d(u, v) >= 2`` (``inf`` included) or they are true twins."""
    d = distances(g)
    adj = []
    for u in g.vertices:
        far = g.full_mask & ~d.within(u, 1)
        twins = sum(1 << w for w in iter_bits(g.adj[u]) if true_twins(g, u, w))
        adj.append(far | twins)
    return Graph(g.n, tuple(adj))
