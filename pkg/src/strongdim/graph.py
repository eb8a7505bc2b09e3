"""Immutable simple graphs on vertices ``0..n-1`` with bitset adjacency.

Distances are *extended* integers: a finite ``int`` or ``math.inf`` for
vertices in different components.  Python's ordering and addition on
``int``/``float('inf')`` already behave as required (``inf <= inf``,
``k + inf == inf``), so no wrapper type is used.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

INF = math.inf
ExtDist = Union[int, float]

#: Largest order for which a full distance matrix is built.
MAX_DISTANCE_ORDER = 4096


class GraphError(ValueError):
    """Raised when an operation is applied outside its domain."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def guard(default: int) -> int:
    """Solver size guard, overridable through ``STRONGDIM_MAX_N``."""
    env = os.environ.get("STRONGDIM_MAX_N")
    return int(env) if env else default


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbour bitset of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency length must equal n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for w in iter_bits(nb):
                if not self.adj[w] >> v & 1:
                    raise GraphError(f"asymmetric edge {v}-{w}")

    # construction -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def from_matrix(cls, matrix) -> "Graph":
        a = np.asarray(matrix, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GraphError("adjacency matrix must be square")
        if not (a == a.T).all():
            raise GraphError("adjacency matrix must be symmetric")
        n = a.shape[0]
        return cls.from_edges(n, ((int(u), int(v)) for u, v in zip(*np.nonzero(np.triu(a, 1)))))

    # basic queries -------------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def m(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def closed_mask(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int8)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; new vertex ``i`` is ``vertices[i]``."""
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            adj.append(sum(1 << index[w] for w in iter_bits(self.adj[v]) if w in index))
        return Graph(len(vertices), tuple(adj))

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(u, v) for u, v in combinations(vs, 2))

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return not any(self.has_edge(u, v) for u, v in combinations(vs, 2))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)))


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_edgeless(g: Graph) -> bool:
    return g.m == 0


def isolated_vertices(g: Graph) -> list[int]:
    return [v for v, nb in enumerate(g.adj) if nb == 0]


def has_isolated(g: Graph) -> bool:
    return any(nb == 0 for nb in g.adj)


def universal_mask(g: Graph) -> int:
    """Bitset of vertices of degree ``n - 1``."""
    return sum(1 << v for v in g.vertices if g.degree(v) == g.n - 1)


def max_degree(g: Graph) -> int:
    return max(g.degrees(), default=0)


def remove_isolated(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Drop degree-0 vertices; returns the subgraph and a new-id -> old-id map."""
    keep = tuple(v for v in g.vertices if g.adj[v])
    return g.induced(keep), keep


def _bfs_layers(g: Graph, source: int) -> list[int]:
    """Bitsets of the vertices at distance 0, 1, 2, ... from ``source``."""
    seen = frontier = 1 << source
    layers = [frontier]
    while True:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        if not nxt:
            return layers
        seen |= nxt
        layers.append(nxt)
        frontier = nxt


def components(g: Graph) -> list[list[int]]:
    """Connected components, ordered by their least vertex."""
    left = g.full_mask
    comps = []
    while left:
        low = (left & -left).bit_length() - 1
        reached = 0
        for layer in _bfs_layers(g, low):
            reached |= layer
        comps.append(list(iter_bits(reached)))
        left &= ~reached
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    reached = 0
    for layer in _bfs_layers(g, 0):
        reached |= layer
    return reached == g.full_mask


class Distances:
    """All-pairs BFS distances plus ball bitsets, cached per graph."""

    __slots__ = ("n", "rows", "balls")

    def __init__(self, g: Graph):
        if g.n > MAX_DISTANCE_ORDER:
            raise GraphError(f"order {g.n} exceeds distance-matrix guard {MAX_DISTANCE_ORDER}")
        self.n = g.n
        self.rows: list[list[ExtDist]] = []
        # balls[v][k]: vertices within distance k of v
        self.balls: list[list[int]] = []
        for v in g.vertices:
            row: list[ExtDist] = [INF] * g.n
            balls = []
            acc = 0
            for k, layer in enumerate(_bfs_layers(g, v)):
                acc |= layer
                balls.append(acc)
                for w in iter_bits(layer):
                    row[w] = k
            self.rows.append(row)
            self.balls.append(balls)

    def __call__(self, u: int, v: int) -> ExtDist:
        return self.rows[u][v]

    def within(self, v: int, k: ExtDist) -> int:
        """Bitset of vertices at distance <= k from v (``k`` may be ``inf``)."""
        balls = self.balls[v]
        if k == INF:
            return (1 << self.n) - 1
        return balls[min(int(k), len(balls) - 1)]


_dist_cache: dict[Graph, Distances] = {}


def distances(g: Graph) -> Distances:
    d = _dist_cache.get(g)
    if d is None:
        if len(_dist_cache) > 50_000:
            _dist_cache.clear()
        d = _dist_cache[g] = Distances(g)
    return d


def distance_matrix(g: Graph) -> np.ndarray:
    """``n x n`` float array of shortest-path lengths, ``inf`` across components."""
    return np.array(distances(g).rows, dtype=float).reshape(g.n, g.n)


def diameter(g: Graph) -> ExtDist:
    if g.n == 0:
        raise GraphError("diameter is undefined on the empty vertex set")
    return max(max(row) for row in distances(g).rows)


def true_twins(g: Graph, u: int, v: int) -> bool:
    if u == v:
        raise GraphError("true_twins needs two distinct vertices")
    return g.closed_mask(u) == g.closed_mask(v)


def has_true_twins(g: Graph) -> bool:
    closed = [g.closed_mask(v) for v in g.vertices]
    return len(set(closed)) < g.n


def twin_free_edges_graph(g: Graph) -> Graph:
    """``g`` with every edge between true twins deleted."""
    adj = []
    for v in g.vertices:
        cv = g.closed_mask(v)
        adj.append(sum(1 << w for w in iter_bits(g.adj[v]) if g.closed_mask(w) != cv))
    return Graph(g.n, tuple(adj))
