"""Exact solvers: clique, independence, vertex cover, twins-free clique,
clique cover / C-graph test and the strong metric dimension.

Everything here is exponential in the worst case and meant for the small
graphs produced by the verification suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, NamedTuple, Optional

from .graph import (
    INF,
    ExtDist,
    Graph,
    GraphError,
    complement,
    diameter,
    distances,
    guard,
    is_connected,
    iter_bits,
    twin_free_edges_graph,
    universal_mask,
)
from .resolving import strong_resolving_graph

BRUTEFORCE_MAX_N = 14
VARPI_BRUTEFORCE_MAX_N = 10


class Witnessed(NamedTuple):
    value: int
    witness: tuple[int, ...]


# maximum clique ---------------------------------------------------------------


def _max_clique_mask(adj: tuple[int, ...], n: int, candidates: int) -> list[int]:
    # relabel by degree (descending, ties by id) so bit order is the greedy order
    order = sorted(iter_bits(candidates), key=lambda v: (-(adj[v] & candidates).bit_count(), v))
    if not order:
        return []
    pos = {v: i for i, v in enumerate(order)}
    radj = [sum(1 << pos[w] for w in iter_bits(adj[v] & candidates)) for v in order]

    best: list[int] = []
    cur: list[int] = []

    def colour_sort(p: int) -> tuple[list[int], list[int]]:
        verts, cols = [], []
        colour = 0
        left = p
        while left:
            colour += 1
            q = left
            while q:
                low = q & -q
                v = low.bit_length() - 1
                verts.append(v)
                cols.append(colour)
                left &= ~low
                q &= ~low & ~radj[v]
        return verts, cols

    def expand(p: int) -> None:
        nonlocal best
        verts, cols = colour_sort(p)
        for i in range(len(verts) - 1, -1, -1):
            if len(cur) + cols[i] <= len(best):
                return
            v = verts[i]
            cur.append(v)
            np_ = p & radj[v]
            if np_:
                expand(np_)
            elif len(cur) > len(best):
                best = cur.copy()
            cur.pop()
            p &= ~(1 << v)

    expand((1 << len(order)) - 1)
    return sorted(order[i] for i in best)


@lru_cache(maxsize=100_000)
def clique_number(g: Graph) -> Witnessed:
    """Exact omega(g) by colour-bounded branch and bound."""
    w = _max_clique_mask(g.adj, g.n, g.full_mask)
    return Witnessed(len(w), tuple(w))


def independence_number(g: Graph) -> Witnessed:
    return clique_number(complement(g))


def vertex_cover_number(g: Graph) -> Witnessed:
    """beta(g) = n - alpha(g); the witness is the complement of an alpha-set."""
    alpha = independence_number(g)
    inside = set(alpha.witness)
    return Witnessed(g.n - alpha.value, tuple(v for v in g.vertices if v not in inside))


def is_vertex_cover(g: Graph, cover: Iterable[int]) -> bool:
    mask = sum(1 << v for v in set(cover))
    return all(mask >> u & 1 or mask >> v & 1 for u, v in g.edges())


@lru_cache(maxsize=100_000)
def twins_free_clique_number(g: Graph) -> Witnessed:
    """Largest clique with pairwise distinct closed neighbourhoods.

    Twins-freeness is pairwise, so these are exactly the cliques of ``g``
    after deleting every edge joining true twins.
    """
    if g.n == 0:
        raise GraphError("twins-free clique number needs at least one vertex")
    return clique_number(twin_free_edges_graph(g))


def is_twins_free_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return g.is_clique(vs) and len({g.closed_mask(v) for v in vs}) == len(vs)


def varpi_bruteforce(g: Graph) -> int:
    if g.n > guard(VARPI_BRUTEFORCE_MAX_N):
        raise GraphError(f"order {g.n} exceeds brute-force guard")
    for k in range(g.n, 0, -1):
        if any(is_twins_free_clique(g, s) for s in combinations(g.vertices, k)):
            return k
    return 0


def universal_vertex_exists_outside(g: Graph, s: Iterable[int]) -> bool:
    """True when every universal (degree ``n - 1``) vertex of ``g`` lies outside ``s``."""
    mask = sum(1 << v for v in s)
    return mask & universal_mask(g) == 0


def varpi_set_search(g: Graph, avoid_universal: bool = True) -> Optional[tuple[int, ...]]:
    """A maximum twins-free clique, optionally one with no universal vertex.

    Returns ``None`` when every maximum twins-free clique uses a universal
    vertex.
    """
    target = twins_free_clique_number(g)
    if not avoid_universal:
        return target.witness
    aux = twin_free_edges_graph(g)
    w = _max_clique_mask(aux.adj, aux.n, g.full_mask & ~universal_mask(g))
    return tuple(w) if len(w) == target.value else None


# colouring / clique cover -----------------------------------------------------


def _colourable(g: Graph, k: int) -> bool:
    n = g.n
    colour = [-1] * n
    # forbidden[v]: bitset of colours used by neighbours
    forbidden = [0] * n
    degs = g.degrees()

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if colour[v] < 0:
                cand = (forbidden[v].bit_count(), degs[v], -v)
                if key is None or cand > key:
                    best, key = v, cand
        return best

    def solve(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        for c in range(min(k, used + 1)):
            if forbidden[v] >> c & 1:
                continue
            colour[v] = c
            saved = []
            for w in iter_bits(g.adj[v]):
                saved.append(forbidden[w])
                forbidden[w] |= 1 << c
            if solve(done + 1, max(used, c + 1)):
                return True
            for w, f in zip(iter_bits(g.adj[v]), saved):
                forbidden[w] = f
            colour[v] = -1
        return False

    return solve(0, 0)


@lru_cache(maxsize=10_000)
def chromatic_number(g: Graph) -> int:
    """Exact chromatic number, searching upward from the clique number."""
    if g.n == 0:
        return 0
    k = clique_number(g).value
    while not _colourable(g, k):
        k += 1
    return k


def clique_cover_number(g: Graph) -> int:
    return chromatic_number(complement(g))


def is_c_graph(g: Graph) -> bool:
    """Vertex set splits into alpha(g) cliques."""
    return clique_cover_number(g) == independence_number(g).value


# strong metric dimension -------------------------------------------------------


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise GraphError("strong metric dimension is defined for connected graphs only")


def strongly_resolves(g: Graph, w: int, u: int, v: int) -> bool:
    d = distances(g)
    return d(w, u) == d(w, v) + d(v, u) or d(w, v) == d(w, u) + d(u, v)


def _resolver_masks(g: Graph) -> list[int]:
    d = distances(g)
    masks = []
    for u, v in combinations(g.vertices, 2):
        duv = d(u, v)
        masks.append(sum(
            1 << w for w in g.vertices
            if d(w, u) == d(w, v) + duv or d(w, v) == d(w, u) + duv
        ))
    return masks


def is_strong_metric_generator(g: Graph, s: Iterable[int]) -> bool:
    _require_connected(g)
    mask = sum(1 << v for v in set(s))
    return all(r & mask for r in _resolver_masks(g))


def strong_metric_dimension(g: Graph) -> Witnessed:
    """dim_s(g) as the vertex cover number of the strong resolving graph."""
    _require_connected(g)
    if g.n < 2:
        raise GraphError("strong metric dimension needs at least two vertices")
    return _dims(g)


@lru_cache(maxsize=100_000)
def _dims(g: Graph) -> Witnessed:
    sr = strong_resolving_graph(g)
    cover = vertex_cover_number(sr.graph)
    return Witnessed(cover.value, tuple(sr.to_parent(cover.witness)))


def bruteforce_basis(g: Graph, max_n: Optional[int] = None) -> tuple[int, ...]:
    """Smallest strong metric generator by exhaustive search over subsets."""
    _require_connected(g)
    limit = guard(BRUTEFORCE_MAX_N) if max_n is None else max_n
    if g.n > limit:
        raise GraphError(f"order {g.n} exceeds brute-force guard {limit}")
    if g.n < 2:
        raise GraphError("strong metric dimension needs at least two vertices")
    masks = _resolver_masks(g)
    for k in range(g.n + 1):
        for s in combinations(g.vertices, k):
            sm = sum(1 << v for v in s)
            if all(r & sm for r in masks):
                return s
    raise AssertionError("the full vertex set always generates")


def strong_metric_dimension_bruteforce(g: Graph, max_n: Optional[int] = None) -> int:
    return len(bruteforce_basis(g, max_n))


# bundle ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InvariantBundle:
    alpha: int
    beta: int
    omega: int
    varpi: int
    diameter: ExtDist
    dim_s: Optional[int]

    def as_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "omega": self.omega,
            "varpi": self.varpi,
            "diameter": "inf" if self.diameter == INF else int(self.diameter),
            "dim_s": self.dim_s,
        }


def invariants(g: Graph) -> InvariantBundle:
    if g.n == 0:
        raise GraphError("invariants need at least one vertex")
    alpha = independence_number(g).value
    beta = vertex_cover_number(g).value
    if alpha + beta != g.n:
        raise AssertionError("Gallai identity violated")
    dims = strong_metric_dimension(g).value if g.n >= 2 and is_connected(g) else None
    return InvariantBundle(
        alpha=alpha,
        beta=beta,
        omega=clique_number(g).value,
        varpi=twins_free_clique_number(g).value,
        diameter=diameter(g),
        dim_s=dims,
    )
