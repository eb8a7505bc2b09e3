"""Graph families: named constructions, seeded random graphs and small-graph
enumeration (all labelled graphs, or one representative per isomorphism
class via a canonical form).

Random families draw from ``numpy.random.default_rng(seed)`` (PCG64), so a
given seed yields the same graphs on every platform.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

import numpy as np

from .graph import Graph, GraphError, empty_graph, is_connected, iter_bits
from .products import cartesian_product, join

ALL_GRAPHS_MAX_N = 6
ISO_CLASSES_MAX_N = 9


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    _need(n >= 1, "empty graph needs n >= 1")
    return empty_graph(n)


def star(n: int) -> Graph:
    """K_{1,n}; hub is vertex 0."""
    _need(n >= 1, "star needs n >= 1 leaves")
    return join(empty_graph(1), empty_graph(n))


def fan(n: int) -> Graph:
    """F_{1,n} = K_1 + P_n; hub is vertex 0."""
    _need(n >= 1, "fan needs n >= 1 path vertices")
    return join(empty_graph(1), path(n))


def wheel(n: int) -> Graph:
    """W_{1,n} = K_1 + C_n; hub is vertex 0."""
    _need(n >= 3, "wheel needs n >= 3 rim vertices")
    return join(empty_graph(1), cycle(n))


def grid(n1: int, n2: int) -> Graph:
    _need(n1 >= 1 and n2 >= 1, "grid needs both sides >= 1")
    return cartesian_product(path(n1), path(n2))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) from a seeded PCG64 stream."""
    _need(n >= 0, "random graph needs n >= 0")
    _need(0.0 <= p <= 1.0, "edge probability must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    return _gnp(n, p, rng)


def _gnp(n: int, p: float, rng: np.random.Generator) -> Graph:
    pairs = list(combinations(range(n), 2))
    keep = rng.random(len(pairs)) < p
    return Graph.from_edges(n, (e for e, k in zip(pairs, keep) if k))


def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) conditioned on connectivity (rejection sampling)."""
    _need(n >= 1, "random connected graph needs n >= 1")
    _need(0.0 < p <= 1.0 or n == 1, "edge probability must lie in (0, 1]")
    rng = np.random.default_rng(seed)
    while True:
        g = _gnp(n, p, rng)
        if is_connected(g):
            return g


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree by decoding a random Pruefer sequence."""
    _need(n >= 1, "tree needs n >= 1")
    if n <= 2:
        return path(n)
    rng = np.random.default_rng(seed)
    seq = [int(x) for x in rng.integers(0, n, size=n - 2)]
    return prufer_decode(seq, n)


def prufer_decode(seq: list[int], n: int) -> Graph:
    if len(seq) != n - 2 or any(not 0 <= x < n for x in seq):
        raise GraphError("Pruefer sequence must have n - 2 entries in 0..n-1")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


# enumeration -------------------------------------------------------------------


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices, in edge-bitmask order."""
    _need(0 <= n <= ALL_GRAPHS_MAX_N, f"all_graphs enumerates n <= {ALL_GRAPHS_MAX_N}")
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield Graph.from_edges(n, (pairs[i] for i in iter_bits(code)))


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement; new cells ordered by neighbour counts."""
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        new: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            sig = {v: tuple((g.adj[v] & m).bit_count() for m in masks) for v in c}
            for s in sorted(set(sig.values())):
                new.append([v for v in c if sig[v] == s])
        if len(new) == len(cells):
            return new
        cells = new


def canonical_form(g: Graph) -> tuple[int, ...]:
    """Isomorphism-invariant code of ``g`` by individualisation-refinement.

    Only one vertex per class of interchangeable twins is individualised,
    since swapping such a pair is an automorphism.
    """
    best: Optional[tuple[int, ...]] = None

    def search(cells: list[list[int]]) -> None:
        nonlocal best
        cells = _refine(g, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            pos = {c[0]: i for i, c in enumerate(cells)}
            code = tuple(
                sum(1 << pos[w] for w in iter_bits(g.adj[c[0]])) for c in cells
            )
            if best is None or code < best:
                best = code
            return
        tried: list[int] = []
        for v in cells[target]:
            if any(g.adj[v] & ~(1 << u) == g.adj[u] & ~(1 << v) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cells[target] if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search([list(g.vertices)])
    return best if best is not None else ()


def from_canonical(code: tuple[int, ...]) -> Graph:
    return Graph(len(code), code)


def _extend(reps: list[Graph], connected: bool) -> list[Graph]:
    seen: dict[tuple[int, ...], Graph] = {}
    for g in reps:
        n = g.n
        for nb in range(1 if connected else 0, 1 << n):
            adj = [a | ((nb >> v & 1) << n) for v, a in enumerate(g.adj)]
            adj.append(nb)
            code = canonical_form(Graph(n + 1, tuple(adj)))
            seen.setdefault(code, None)
    return [from_canonical(c) for c in sorted(seen)]


_iso_cache: dict[tuple[int, bool], list[Graph]] = {}


def nonisomorphic_graphs(n: int, connected: bool = False) -> list[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices.

    Connected classes are grown from connected classes on ``n - 1`` vertices
    (every connected graph has a non-cut vertex).
    """
    _need(1 <= n <= ISO_CLASSES_MAX_N, f"isomorphism classes enumerated for 1 <= n <= {ISO_CLASSES_MAX_N}")
    key = (n, connected)
    if key not in _iso_cache:
        if n == 1:
            _iso_cache[key] = [empty_graph(1)]
        else:
            _iso_cache[key] = _extend(nonisomorphic_graphs(n - 1, connected), connected)
    return _iso_cache[key]


# specs -----------------------------------------------------------------------------

FAMILY_KINDS = (
    "path", "cycle", "complete", "empty", "star", "fan", "wheel", "grid",
    "random_tree", "random_graph", "all_graphs",
)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int
    n2: Optional[int] = None
    p: float = 0.5
    seed: int = 0


def generate(spec: FamilySpec):
    """Build the family member named by ``spec``.

    ``all_graphs`` returns an iterator over every labelled graph of order
    ``spec.n``; every other kind returns a single :class:`Graph`.
    """
    k, n = spec.kind, spec.n
    if k == "grid":
        _need(spec.n2 is not None, "grid needs a second side n2")
        return grid(n, spec.n2)
    if k == "random_tree":
        return random_tree(n, spec.seed)
    if k == "random_graph":
        return random_graph(n, spec.p, spec.seed)
    if k == "all_graphs":
        return all_graphs(n)
    builders = {
        "path": path, "cycle": cycle, "complete": complete, "empty": empty,
        "star": star, "fan": fan, "wheel": wheel,
    }
    if k not in builders:
        raise GraphError(f"unknown family {k!r}; expected one of {', '.join(FAMILY_KINDS)}")
    return builders[k](n)


def _need(ok: bool, message: str) -> None:
    if not ok:
        raise GraphError(message)
