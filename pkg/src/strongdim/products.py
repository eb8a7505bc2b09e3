"""Graph products on a shared row-major labelling.

Product vertex ``(u, v)`` gets id ``u * n2 + v`` where ``n2`` is the order of
the second factor, so identities such as ``complement(G + H) == Gc x Hc``
hold as labelled-graph equalities.
"""

from __future__ import annotations

from typing import NamedTuple

from .graph import Graph, GraphError, iter_bits


class ProductLabel(NamedTuple):
    u: int
    v: int

    def flat(self, n2: int) -> int:
        return self.u * n2 + self.v


def flatten(u: int, v: int, n2: int) -> int:
    return u * n2 + v


def unflatten(flat: int, n2: int) -> ProductLabel:
    return ProductLabel(*divmod(flat, n2))


def _check(g: Graph, h: Graph) -> None:
    if g.n == 0 or h.n == 0:
        raise GraphError("product factors must have at least one vertex")


def _spread(mask: int, n2: int, row_mask: int) -> int:
    """Bitset of every product vertex whose first coordinate lies in ``mask``."""
    out = 0
    for a in iter_bits(mask):
        out |= row_mask << (a * n2)
    return out


def _build(g: Graph, h: Graph, rule) -> Graph:
    _check(g, h)
    n1, n2 = g.n, h.n
    row = (1 << n2) - 1
    adj = []
    for a in range(n1):
        for b in range(n2):
            nb = rule(a, b, row)
            adj.append(nb & ~(1 << (a * n2 + b)))
    return Graph(n1 * n2, tuple(adj))


def cartesian_sum(g: Graph, h: Graph) -> Graph:
    """Disjunctive product: ``(a,b) ~ (c,d)`` iff ``a ~ c`` in g or ``b ~ d`` in h."""
    n2 = h.n

    def rule(a, b, row):
        return _spread(g.adj[a], n2, row) | _spread(g.full_mask, n2, h.adj[b])

    return _build(g, h, rule)


def strong_product(g: Graph, h: Graph) -> Graph:
    n2 = h.n

    def rule(a, b, row):
        closed_g = g.adj[a] | (1 << a)
        closed_h = h.adj[b] | (1 << b)
        return _spread(closed_g, n2, closed_h)

    return _build(g, h, rule)


def lexicographic_product(g: Graph, h: Graph) -> Graph:
    n2 = h.n

    def rule(a, b, row):
        return _spread(g.adj[a], n2, row) | (h.adj[b] << (a * n2))

    return _build(g, h, rule)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    n2 = h.n

    def rule(a, b, row):
        return _spread(g.adj[a], n2, 1 << b) | (h.adj[b] << (a * n2))

    return _build(g, h, rule)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union (g first, h shifted by ``g.n``) plus every cross edge."""
    _check(g, h)
    n1 = g.n
    hmask = h.full_mask << n1
    adj = [nb | hmask for nb in g.adj]
    adj += [(nb << n1) | g.full_mask for nb in h.adj]
    return Graph(n1 + h.n, tuple(adj))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n1 = g.n
    return Graph(n1 + h.n, tuple(g.adj) + tuple(nb << n1 for nb in h.adj))


def transpose(g: Graph, n1: int, n2: int) -> Graph:
    """Relabel a product on ``n1 x n2`` by ``(u, v) -> (v, u)``."""
    if g.n != n1 * n2:
        raise GraphError("order does not match n1 * n2")
    perm = [flatten(v, u, n1) for u in range(n1) for v in range(n2)]
    return relabel(g, perm)


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    adj = [0] * g.n
    for v in g.vertices:
        adj[perm[v]] = sum(1 << perm[w] for w in iter_bits(g.adj[v]))
    return Graph(g.n, tuple(adj))


PRODUCTS = {
    "sum": cartesian_sum,
    "strong": strong_product,
    "lex": lexicographic_product,
    "cartesian": cartesian_product,
    "join": join,
}
