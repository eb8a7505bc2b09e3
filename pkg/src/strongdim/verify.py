"""Theorem suite for Cartesian sum graphs.

Each :class:`ClaimCheck` pairs a hypothesis with an assertion.  The
assertion runs only on instances where the hypothesis holds; others are
counted as skipped.  A run passes when no assertion fails and every claim
was checked at least once.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Optional

import numpy as np

from . import families as fam
from .graph import (
    INF,
    Graph,
    GraphError,
    complement,
    diameter,
    has_isolated,
    has_true_twins,
    is_complete,
    is_connected,
    is_edgeless,
    max_degree,
    remove_isolated,
)
from .io import format_graph6
from .products import cartesian_sum, lexicographic_product, strong_product
from .resolving import star_closure, strong_resolving_graph, tf_strong_resolving_graph
from .solvers import (
    bruteforce_basis,
    clique_number,
    independence_number,
    is_c_graph,
    is_strong_metric_generator,
    is_twins_free_clique,
    is_vertex_cover,
    strong_metric_dimension,
    twins_free_clique_number,
    varpi_set_search,
    vertex_cover_number,
)

MAX_SMALL_ORDER = 6
MAX_RANDOM_ORDER = 8
MAX_FAMILY_ORDER = 8
ORACLE_MAX_N = 12
COVER_COMPLEMENT_MAX_N = 20


# corpus ------------------------------------------------------------------------


@dataclass(frozen=True)
class Named:
    name: str
    graph: Graph


@dataclass(frozen=True)
class Instance:
    g: Named
    h: Optional[Named] = None
    k: Optional[int] = None
    part: str = ""

    def describe(self) -> str:
        parts = [f"G={self.g.name}"]
        if self.h is not None:
            parts.append(f"H={self.h.name}")
        if self.k is not None:
            parts.append(f"k={self.k}")
        text = " ".join(parts)
        return f"({self.part}) {text}" if self.part else text


@dataclass(frozen=True)
class CorpusConfig:
    """Sizes of the instance streams.

    Pair claims run over every ordered pair of small graphs: all labelled
    graphs of order ``1..min(max_order, 4)`` plus one graph per isomorphism
    class for larger orders up to ``max_order``.
    """

    max_order: int = 4
    family_orders: tuple[int, int] = (3, 7)
    random_pairs: int = 100
    random_orders: tuple[int, int] = (5, 8)
    seed: int = 20140901
    oracle_max_n: int = ORACLE_MAX_N

    def validate(self) -> None:
        if not 1 <= self.max_order <= MAX_SMALL_ORDER:
            raise GraphError(f"max_order must lie in 1..{MAX_SMALL_ORDER}")
        lo, hi = self.random_orders
        if not 2 <= lo <= hi <= MAX_RANDOM_ORDER:
            raise GraphError(f"random orders must satisfy 2 <= lo <= hi <= {MAX_RANDOM_ORDER}")
        lo, hi = self.family_orders
        if not 2 <= lo <= hi <= MAX_FAMILY_ORDER:
            raise GraphError(f"family orders must satisfy 2 <= lo <= hi <= {MAX_FAMILY_ORDER}")
        if self.random_pairs < 0:
            raise GraphError("random pair count must be non-negative")
        if not 2 <= self.oracle_max_n <= 14:
            raise GraphError("oracle_max_n must lie in 2..14")


def _g6(g: Graph) -> Named:
    return Named(f"g6:{format_graph6(g)}", g)


class Corpus:
    """Lazily built instance streams shared by all claims of one run."""

    def __init__(self, config: CorpusConfig):
        config.validate()
        self.config = config

    @property
    def small(self) -> list[Named]:
        if not hasattr(self, "_small"):
            out = []
            for n in range(1, min(self.config.max_order, 4) + 1):
                out.extend(_g6(g) for g in fam.all_graphs(n))
            for n in range(5, self.config.max_order + 1):
                out.extend(_g6(g) for g in fam.nonisomorphic_graphs(n))
            self._small = out
        return self._small

    @property
    def family_graphs(self) -> list[Named]:
        if not hasattr(self, "_families"):
            lo, hi = self.config.family_orders
            out = []
            for n in range(lo, hi + 1):
                out.append(Named(f"P_{n}", fam.path(n)))
                out.append(Named(f"K_{n}", fam.complete(n)))
                out.append(Named(f"N_{n}", fam.empty(n)))
                out.append(Named(f"K_1,{n - 1}", fam.star(n - 1)))
                out.append(Named(f"F_1,{n - 1}", fam.fan(n - 1)))
                out.append(Named(f"T_{n}#{n}", fam.random_tree(n, self.config.seed + n)))
                if n >= 3:
                    out.append(Named(f"C_{n}", fam.cycle(n)))
                if n >= 4:
                    out.append(Named(f"W_1,{n - 1}", fam.wheel(n - 1)))
                for a in range(2, n):
                    if n % a == 0 and a <= n // a:
                        out.append(Named(f"P_{a}xP_{n // a}", fam.grid(a, n // a)))
            self._families = out
        return self._families

    @property
    def random_pairs(self) -> list[tuple[Named, Named]]:
        if not hasattr(self, "_random"):
            rng = np.random.default_rng(self.config.seed)
            lo, hi = self.config.random_orders
            out = []
            for i in range(self.config.random_pairs):
                pair = []
                for side in "GH":
                    n = int(rng.integers(lo, hi + 1))
                    p = round(float(rng.uniform(0.2, 0.8)), 3)
                    seed = int(rng.integers(0, 2**31))
                    g = fam.random_graph(n, p, seed)
                    pair.append(Named(f"G({n},{p},seed={seed})", g))
                out.append(tuple(pair))
            self._random = out
        return self._random

    def singles(self) -> Iterator[Instance]:
        for g in self.small + self.family_graphs:
            yield Instance(g)
        for g, h in self.random_pairs:
            yield Instance(g)
            yield Instance(h)

    def oracle(self) -> Iterator[Instance]:
        """Single graphs plus small Cartesian sums within the brute-force guard."""
        seen = set()
        for inst in self.singles():
            if inst.g.graph.n <= self.config.oracle_max_n and inst.g.graph not in seen:
                seen.add(inst.g.graph)
                yield inst
        for inst in self.small_pairs():
            g, h = inst.g.graph, inst.h.graph
            if 2 <= g.n * h.n <= self.config.oracle_max_n:
                s = _sum(g, h)
                if s not in seen:
                    seen.add(s)
                    yield Instance(Named(f"{inst.g.name}(+){inst.h.name}", s))

    def small_pairs(self) -> Iterator[Instance]:
        for g in self.small:
            for h in self.small:
                yield Instance(g, h)

    def pairs(self) -> Iterator[Instance]:
        yield from self.small_pairs()
        for g, h in self.random_pairs:
            yield Instance(g, h)
        fams = self.family_graphs
        for g in fams:
            for h in fams:
                if g.graph.n * h.graph.n <= 30:
                    yield Instance(g, h)

    def with_empty(self, ks: Iterable[int]) -> Iterator[Instance]:
        ks = tuple(ks)
        for inst in self.singles():
            for k in ks:
                yield Instance(inst.g, Named(f"N_{k}", fam.empty(k)), k=k)

    def with_complete(self, ks: Iterable[int]) -> Iterator[Instance]:
        ks = tuple(ks)
        for inst in self.singles():
            for k in ks:
                yield Instance(inst.g, Named(f"K_{k}", fam.complete(k)), k=k)

    def stars(self) -> Iterator[Instance]:
        for n in range(2, 6):
            for k in range(2, 6):
                yield Instance(Named(f"K_1,{n}", fam.star(n)), Named(f"K_{k}", fam.complete(k)))

    def remark(self) -> Iterator[Instance]:
        """Factor pairs for the closed formulae: sparse class S and fan/wheel class F."""
        lo, hi = self.config.family_orders
        sparse, hubbed = [], []
        for n in range(max(lo, 3), hi + 1):
            sparse.append(Named(f"P_{n}", fam.path(n)))
            sparse.append(Named(f"T_{n}#{n}", fam.random_tree(n, self.config.seed + n)))
            if n >= 4:
                sparse.append(Named(f"C_{n}", fam.cycle(n)))
                # fans and wheels named by rim size r; order r + 1
                hubbed.append(Named(f"F_1,{n}", fam.fan(n)))
                hubbed.append(Named(f"W_1,{n}", fam.wheel(n)))
            for a in range(2, n):
                if n % a == 0 and a <= n // a:
                    sparse.append(Named(f"P_{a}xP_{n // a}", fam.grid(a, n // a)))
        hubbed = [x for x in hubbed if x.graph.n <= hi + 1]
        for g in sparse:
            for h in sparse:
                yield Instance(g, h, part="i")
        for g in hubbed:
            for h in hubbed:
                yield Instance(g, h, part="ii")
        for g in sparse:
            for h in hubbed:
                yield Instance(g, h, part="iii")


# cached computations ------------------------------------------------------------


@lru_cache(maxsize=50_000)
def _sum(g: Graph, h: Graph) -> Graph:
    return cartesian_sum(g, h)


@lru_cache(maxsize=50_000)
def _diam(g: Graph):
    return diameter(g)


def _dims(g: Graph) -> int:
    return strong_metric_dimension(g).value


def _omega(g: Graph) -> int:
    return clique_number(g).value


def _varpi(g: Graph) -> int:
    return twins_free_clique_number(g).value


def _alpha(g: Graph) -> int:
    return independence_number(g).value


def _beta(g: Graph) -> int:
    return vertex_cover_number(g).value


@lru_cache(maxsize=10_000)
def _cgraph(g: Graph) -> bool:
    return is_c_graph(g)


@lru_cache(maxsize=10_000)
def _has_plain_varpi_set(g: Graph) -> bool:
    return varpi_set_search(g, avoid_universal=True) is not None


def _nontrivial(g: Graph) -> bool:
    return g.n >= 2


def _standing(g: Graph, h: Graph) -> bool:
    """Both factors non-trivial and at least one of them non-complete."""
    return g.n >= 2 and h.n >= 2 and not (is_complete(g) and is_complete(h))


def _diam_cond(g: Graph, h: Graph) -> bool:
    return _diam(g) <= 2 or not (has_isolated(g) or has_isolated(h))


# claims --------------------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    ok: bool
    expected: str
    got: str


def _eq(label: str, expected, got) -> Check:
    return Check(expected == got, f"{label} = {expected}", f"{label} = {got}")


def _le(label: str, lhs, rhs) -> Check:
    return Check(lhs <= rhs, f"{label}: {lhs} <= {rhs}", f"{label}: {lhs} vs {rhs}")


@dataclass(frozen=True)
class ClaimCheck:
    claim_id: str
    statement: str
    corpus: Callable[[Corpus], Iterable[Instance]]
    hypothesis: Callable[[Instance], bool]
    assertion: Callable[[Instance], list[Check]]
    record: bool = False


def _a_gallai(i: Instance) -> list[Check]:
    g = i.g.graph
    a, b, w = independence_number(g), vertex_cover_number(g), clique_number(g)
    return [
        _eq("alpha+beta", g.n, a.value + b.value),
        Check(g.is_independent(a.witness) and len(a.witness) == a.value, "alpha witness independent", str(a.witness)),
        Check(is_vertex_cover(g, b.witness) and len(b.witness) == b.value, "beta witness covers", str(b.witness)),
        Check(g.is_clique(w.witness) and len(w.witness) == w.value, "omega witness is a clique", str(w.witness)),
    ]


def _a_oellermann(i: Instance) -> list[Check]:
    g = i.g.graph
    red = strong_metric_dimension(g)
    brute = bruteforce_basis(g, max_n=14)
    return [
        _eq("dim_s (reduction vs brute force)", len(brute), red.value),
        Check(is_strong_metric_generator(g, red.witness), "witness is a strong metric generator", str(red.witness)),
    ]


def _a_cart_lex(i: Instance) -> list[Check]:
    g, h = i.g.graph, i.h.graph
    return [Check(cartesian_sum(g, h) == lexicographic_product(g, h), "G(+)N_k == G o N_k", "edge sets differ")]


def _a_lex_empty(i: Instance) -> list[Check]:
    g, k = i.g.graph, i.k
    n = g.n
    got = _dims(lexicographic_product(g, fam.empty(k)))
    if is_complete(g):
        return [_eq("dim_s(K_n o N_k)", n * (k - 1), got)]
    srs = tf_strong_resolving_graph(g)
    sr = strong_resolving_graph(g)
    sr_edges = {frozenset(sr.to_parent(e)) for e in sr.graph.edges()}
    srs_edges = {frozenset(srs.to_parent(e)) for e in srs.graph.edges()}
    checks = [
        _eq("dim_s(G o N_k)", n * (k - 1) + _beta(srs.graph), got),
        Check(set(srs.vertex_map) <= set(sr.vertex_map) and srs_edges <= sr_edges,
              "G_SRS subgraph of G_SR", "G_SRS not contained in G_SR"),
    ]
    if not has_true_twins(g):
        checks.append(_eq("dim_s(G o N_k) twin-free", n * (k - 1) + _dims(g), got))
    return checks


def _a_complete_iff(i: Instance) -> list[Check]:
    g, h = i.g.graph, i.h.graph
    return [_eq("complete(G(+)H)", is_complete(g) and is_complete(h), is_complete(_sum(g, h)))]


def _a_diam_i(i: Instance) -> list[Check]:
    g, h = i.g.graph, i.h.graph
    return [_eq("D(G(+)N_k)", max(2, _diam(g)), _diam(_sum(g, h)))]


def _a_diam_const(value):
    def check(i: Instance) -> list[Check]:
        return [_eq("D(G(+)H)", value, _diam(_sum(i.g.graph, i.h.graph)))]

    return check


def _h_diam_v(i: Instance) -> bool:
    g, h = i.g.graph, i.h.graph
    return (_standing(g, h) and _diam(h) > 2 and not has_isolated(h)
            and not is_edgeless(g) and has_isolated(g))


def _a_connectivity(i: Instance) -> list[Check]:
    g, h = i.g.graph, i.h.graph
    predicted = ((has_isolated(g) and has_isolated(h))
                 or (is_edgeless(g) and not is_connected(h))
                 or (is_edgeless(h) and not is_connected(g)))
    return [_eq("G(+)H disconnected", predicted, not is_connected(_sum(g, h)))]


def _a_sr_iso(i: Instance) -> list[Check]:
    s = _sum(i.g.graph, i.h.graph)
    sr = strong_resolving_graph(s)
    star, keep = remove_isolated(star_closure(s))
    if sr.graph == star and sr.vertex_map == keep:
        return [Check(True, "labelled equality", "labelled equality")]
    import networkx as nx

    a = nx.from_edgelist(sr.graph.edges())
    a.add_nodes_from(range(sr.graph.n))
    b = nx.from_edgelist(star.edges())
    b.add_nodes_from(range(star.n))
    if nx.is_isomorphic(a, b):
        return [Check(True, "isomorphic", "isomorphic only (labelled equality failed)")]
    return [Check(False, "(G(+)H)_SR iso (G(+)H)*_-", "not isomorphic")]


def _a_dims_beta_star(i: Instance) -> list[Check]:
    s = _sum(i.g.graph, i.h.graph)
    star, _ = remove_isolated(star_closure(s))
    return [_eq("dim_s(G(+)H)", _beta(star), _dims(s))]


def _a_complement_law(i: Instance) -> list[Check]:
    g, h = i.g.graph, i.h.graph
    ok = complement(_sum(g, h)) == strong_product(complement(g), complement(h))
    return [Check(ok, "(G(+)H)^c == G^c [x] H^c", "edge sets differ")]


def _h_twin_free_pair(i: Instance) -> bool:
    g, h = i.g.graph, i.h.graph
    return (_standing(g, h) and not has_true_twins(g) and not has_true_twins(h)
            and _diam_cond(g, h))


def _a_dims_cover_complement(i: Instance) -> list[Check]:
    g, h = i.g.graph, i.h.graph
    return [_eq("dim_s(G(+)H)", _beta(strong_product(complement(g), complement(h))), _dims(_sum(g, h)))]


def _a_cgraph_alpha(i: Instance) -> list[Check]:
    g, h = i.g.graph, i.h.graph
    return [_eq("alpha(G[x]H)", _alpha(g) * _alpha(h), _alpha(strong_product(g, h)))]


def _a_cgraph_dims(i: Instance) -> list[Check]:
    g, h = i.g.graph, i.h.graph
    return [_eq("dim_s(G(+)H)", g.n * h.n - _omega(g) * _omega(h), _dims(_sum(g, h)))]


def _a_thd2(i: Instance) -> list[Check]:
    g = i.g.graph
    ds = strong_metric_dimension(g)
    tf = twins_free_clique_number(g)
    om = _omega(g)
    checks = [
        _le("dim_s <= n - varpi", ds.value, g.n - tf.value),
        Check(om >= tf.value >= 1, "omega >= varpi >= 1", f"omega={om} varpi={tf.value}"),
        Check(is_twins_free_clique(g, tf.witness) and len(tf.witness) == tf.value,
              "varpi witness is a twins-free clique", str(tf.witness)),
        Check(is_strong_metric_generator(g, ds.witness) and len(ds.witness) == ds.value,
              "dim_s witness generates", str(ds.witness)),
    ]
    if _diam(g) == 2:
        checks.append(_eq("dim_s at D=2", g.n - tf.value, ds.value))
    return checks


def _a_varpi_product(i: Instance) -> list[Check]:
    g, h = i.g.graph, i.h.graph
    return [_le("varpi(G)varpi(H) <= varpi(G(+)H)", _varpi(g) * _varpi(h), _varpi(_sum(g, h)))]


def _a_omega_product(i: Instance) -> list[Check]:
    g, h = i.g.graph, i.h.graph
    s = _sum(g, h)
    w = clique_number(s)
    return [
        _eq("omega(G(+)H)", _omega(g) * _omega(h), w.value),
        Check(s.is_clique(w.witness), "omega witness is a clique", str(w.witness)),
    ]


def _h_bounds(i: Instance) -> bool:
    g, h = i.g.graph, i.h.graph
    return g.n * h.n >= 2 and is_connected(_sum(g, h))


def _a_bounds(i: Instance) -> list[Check]:
    g, h = i.g.graph, i.h.graph
    nn = g.n * h.n
    d = _dims(_sum(g, h))
    checks = [_le("dim_s <= nn' - varpi varpi", d, nn - _varpi(g) * _varpi(h))]
    if _nontrivial(g) and _nontrivial(h) and _diam_cond(g, h):
        checks.append(_le("nn' - omega omega <= dim_s", nn - _omega(g) * _omega(h), d))
    return checks


def _h_both_equal(i: Instance) -> bool:
    g, h = i.g.graph, i.h.graph
    return (_standing(g, h) and _diam_cond(g, h)
            and _omega(g) == _varpi(g) and _omega(h) == _varpi(h))


def _a_both_equal(i: Instance) -> list[Check]:
    g, h = i.g.graph, i.h.graph
    return [_eq("dim_s(G(+)H)", g.n * h.n - _omega(g) * _omega(h), _dims(_sum(g, h)))]


def _a_remark(i: Instance) -> list[Check]:
    g, h = i.g.graph, i.h.graph
    got = _dims(_sum(g, h))
    if i.part == "i":
        n, n2 = g.n, h.n
        return [_eq(f"remark-examples-i dim_s = nn'-4 (n={n}, n'={n2})", n * n2 - 4, got)]
    if i.part == "ii":
        n, n2 = g.n - 1, h.n - 1
        return [_eq(f"remark-examples-ii dim_s = nn'+n+n'-8 (n={n}, n'={n2})", n * n2 + n + n2 - 8, got)]
    n, n2 = g.n, h.n - 1
    return [_eq(f"remark-examples-iii dim_s = nn'+n-6 (n={n}, n'={n2})", n * n2 + n - 6, got)]


def _a_varpi_cases(i: Instance) -> list[Check]:
    g, h = i.g.graph, i.h.graph
    vs = _varpi(_sum(g, h))
    vg, vh, og, oh = _varpi(g), _varpi(h), _omega(g), _omega(h)
    checks = [_le("max{(vG-1)oH,(vH-1)oG}+1 <= varpi(G(+)H)", max((vg - 1) * oh, (vh - 1) * og) + 1, vs)]
    if _has_plain_varpi_set(g):
        checks.append(_le("varpi(G)omega(H) <= varpi(G(+)H)", vg * oh, vs))
    return checks


def _a_cor_varpi(i: Instance) -> list[Check]:
    g, h = i.g.graph, i.h.graph
    s = _sum(g, h)
    vs = _varpi(s)
    vg, vh, og, oh = _varpi(g), _varpi(h), _omega(g), _omega(h)
    plain_g, plain_h = _has_plain_varpi_set(g), _has_plain_varpi_set(h)
    bounds = {"i": max((vg - 1) * oh, og * (vh - 1)) + 1}
    if plain_g and plain_h:
        bounds["ii"] = max(vg * oh, og * vh)
    if plain_g:
        bounds["iii"] = max(vg * oh, og * (vh - 1) + 1)
    checks = [_le(f"cor-varpi-cases ({k}) bound <= varpi(G(+)H)", b, vs) for k, b in bounds.items()]
    if is_connected(s):
        d = _dims(s)
        nn = g.n * h.n
        checks += [_le(f"prop-other-upper ({k}) dim_s <= nn' - bound", d, nn - b) for k, b in bounds.items()]
    return checks


def _h_cor_complete(i: Instance) -> bool:
    g = i.g.graph
    return _nontrivial(g) and not has_true_twins(g) and max_degree(g) <= g.n - 2


def _a_cor_complete(i: Instance) -> list[Check]:
    g, k = i.g.graph, i.h.graph.n
    return [_eq("dim_s(G(+)K_k)", g.n * k - k * _omega(g), _dims(_sum(g, i.h.graph)))]


def _a_cor_star(i: Instance) -> list[Check]:
    n, k = i.g.graph.n - 1, i.h.graph.n
    s = _sum(i.g.graph, i.h.graph)
    d = _dims(s)
    lo, hi = (n + 1) * k - 2 * k, (n + 1) * k - k - 1
    checks = [Check(lo <= d <= hi, f"{lo} <= dim_s <= {hi}", f"dim_s(K_1,{n}(+)K_{k}) = {d}")]
    if s.n <= 14:
        checks.append(_eq(f"dim_s(K_1,{n}(+)K_{k}) brute force", len(bruteforce_basis(s)), d))
    return checks


def _always(i: Instance) -> bool:
    return True


def _h_connected(i: Instance) -> bool:
    g = i.g.graph
    return g.n >= 2 and is_connected(g)


def claim_registry() -> list[ClaimCheck]:
    """Every claim of the suite, with its hypothesis and assertion."""
    pairs = Corpus.pairs
    std = lambda i: _standing(i.g.graph, i.h.graph)  # noqa: E731
    return [
        ClaimCheck("gallai", "beta(G) + alpha(G) = n", Corpus.singles, _always, _a_gallai),
        ClaimCheck("oellermann", "dim_s(G) = beta(G_SR) for connected G",
                   Corpus.oracle, _h_connected, _a_oellermann),
        ClaimCheck("cart-lex", "G (+) N_k = G o N_k",
                   lambda c: c.with_empty((1, 2, 3)), _always, _a_cart_lex),
        ClaimCheck("lex-empty", "dim_s(G o N_k) = n(k-1) + beta(G_SRS); = n(k-1) + dim_s(G) twin-free; "
                   "dim_s(K_n o N_k) = n(k-1)",
                   lambda c: c.with_empty((2, 3)), _h_connected, _a_lex_empty),
        ClaimCheck("complete-iff", "G (+) H complete iff G and H complete", pairs, _always, _a_complete_iff),
        ClaimCheck("diam-i", "D(G (+) N_k) = max{2, D(G)}",
                   lambda c: c.with_empty((2, 3)), lambda i: _nontrivial(i.g.graph), _a_diam_i),
        ClaimCheck("diam-ii", "both factors have isolated vertices => D(G (+) H) = inf", pairs,
                   lambda i: std(i) and has_isolated(i.g.graph) and has_isolated(i.h.graph),
                   _a_diam_const(INF)),
        ClaimCheck("diam-iii", "no isolated vertices in either factor => D(G (+) H) = 2", pairs,
                   lambda i: std(i) and not has_isolated(i.g.graph) and not has_isolated(i.h.graph),
                   _a_diam_const(2)),
        ClaimCheck("diam-iv", "D(H) <= 2 => D(G (+) H) = 2", pairs,
                   lambda i: std(i) and _diam(i.h.graph) <= 2, _a_diam_const(2)),
        ClaimCheck("diam-v", "D(H) > 2, H without isolated vertices, G non-empty with an isolated "
                   "vertex => D(G (+) H) = 3", pairs, _h_diam_v, _a_diam_const(3)),
        ClaimCheck("connectivity", "G (+) H disconnected iff both have isolated vertices or one is "
                   "empty and the other disconnected",
                   pairs, lambda i: _nontrivial(i.g.graph) and _nontrivial(i.h.graph), _a_connectivity),
        ClaimCheck("sr-iso", "(G (+) H)_SR = (G (+) H)*_-", pairs,
                   lambda i: std(i) and _diam_cond(i.g.graph, i.h.graph), _a_sr_iso),
        ClaimCheck("dims-beta-star", "dim_s(G (+) H) = beta((G (+) H)*_-)", pairs,
                   lambda i: std(i) and _diam_cond(i.g.graph, i.h.graph), _a_dims_beta_star),
        ClaimCheck("complement-law", "(G (+) H)^c = G^c [x] H^c", pairs, _always, _a_complement_law),
        ClaimCheck("dims-cover-complement", "dim_s(G (+) H) = beta(G^c [x] H^c) for twin-free factors",
                   pairs, lambda i: _h_twin_free_pair(i)
                   and i.g.graph.n * i.h.graph.n <= COVER_COMPLEMENT_MAX_N,
                   _a_dims_cover_complement),
        ClaimCheck("cgraph-alpha", "alpha(G [x] H) = alpha(G) alpha(H) for a C-graph G", pairs,
                   lambda i: _cgraph(i.g.graph), _a_cgraph_alpha),
        ClaimCheck("cgraph-dims", "dim_s(G (+) H) = nn' - omega(G) omega(H) when G^c is a C-graph",
                   pairs, lambda i: _h_twin_free_pair(i) and _cgraph(complement(i.g.graph)),
                   _a_cgraph_dims),
        ClaimCheck("thD2", "dim_s(G) <= n - varpi(G), with equality when D(G) = 2",
                   Corpus.singles, _h_connected, _a_thd2),
        ClaimCheck("varpi-product", "varpi(G (+) H) >= varpi(G) varpi(H)", pairs, _always, _a_varpi_product),
        ClaimCheck("omega-product", "omega(G (+) H) = omega(G) omega(H)", pairs, _always, _a_omega_product),
        ClaimCheck("bounds-cartsum", "nn' - omega(G)omega(H) <= dim_s(G (+) H) <= nn' - varpi(G)varpi(H)",
                   pairs, _h_bounds, _a_bounds),
        ClaimCheck("both-cliques-equal", "omega = varpi in both factors => dim_s(G (+) H) = nn' - omega omega",
                   pairs, _h_both_equal, _a_both_equal),
        ClaimCheck("remark-examples", "closed formulae nn'-4, nn'+n+n'-8, nn'+n-6 for trees, cycles, grids, "
                   "fans and wheels", Corpus.remark,
                   lambda i: not (is_complete(i.g.graph) and is_complete(i.h.graph)), _a_remark, record=True),
        ClaimCheck("varpi-cases", "varpi(G (+) H) >= max{(varpi(G)-1)omega(H), (varpi(H)-1)omega(G)} + 1",
                   pairs, lambda i: _nontrivial(i.g.graph) and _nontrivial(i.h.graph), _a_varpi_cases),
        ClaimCheck("cor-varpi-cases", "lower bounds (i)-(iii) on varpi(G (+) H) and the matching upper bounds "
                   "on dim_s(G (+) H)", pairs,
                   lambda i: _nontrivial(i.g.graph) and _nontrivial(i.h.graph), _a_cor_varpi),
        ClaimCheck("cor-complete", "dim_s(G (+) K_k) = nk - k omega(G) for twin-free G with max degree <= n-2",
                   lambda c: c.with_complete((2, 3, 4)), _h_cor_complete, _a_cor_complete),
        ClaimCheck("cor-star", "(n+1)k - 2k <= dim_s(K_1,n (+) K_k) <= (n+1)k - k - 1",
                   Corpus.stars, _always, _a_cor_star, record=True),
    ]


# report ----------------------------------------------------------------------------------


@dataclass
class Failure:
    instance: str
    expected: str
    got: str


@dataclass
class ClaimResult:
    id: str
    statement: str = ""
    checked: int = 0
    skipped: int = 0
    failures: list[Failure] = field(default_factory=list)
    records: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.failures


@dataclass
class VerifyReport:
    claims: list[ClaimResult]
    runtime_ms: int

    @property
    def passed(self) -> bool:
        return bool(self.claims) and all(c.passed for c in self.claims)

    def claim(self, claim_id: str) -> ClaimResult:
        return next(c for c in self.claims if c.id == claim_id)

    def to_dict(self) -> dict:
        return {
            "claims": [
                {
                    "id": c.id,
                    "statement": c.statement,
                    "checked": c.checked,
                    "skipped": c.skipped,
                    "failures": [vars(f) for f in c.failures],
                    "records": c.records,
                }
                for c in self.claims
            ],
            "pass": self.passed,
            "runtime_ms": self.runtime_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def summary_lines(self) -> list[str]:
        lines = []
        for c in self.claims:
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"{status} {c.id}: checked={c.checked} skipped={c.skipped} failures={len(c.failures)}")
        lines.append(f"{'PASS' if self.passed else 'FAIL'} overall ({self.runtime_ms} ms)")
        return lines


def run_claim(claim: ClaimCheck, instances: Iterable[Instance]) -> ClaimResult:
    res = ClaimResult(claim.claim_id, claim.statement)
    for inst in instances:
        if not claim.hypothesis(inst):
            res.skipped += 1
            continue
        res.checked += 1
        for chk in claim.assertion(inst):
            if not chk.ok:
                res.failures.append(Failure(inst.describe(), chk.expected, chk.got))
            elif claim.record:
                res.records.append(f"{inst.describe()}: {chk.got}")
    return res


def run_suite(config: CorpusConfig = CorpusConfig(), claims: Optional[Iterable[str]] = None,
              progress: Optional[Callable[[ClaimResult], None]] = None) -> VerifyReport:
    """Evaluate the registry (or the named subset) over the configured corpus."""
    config.validate()
    registry = {c.claim_id: c for c in claim_registry()}
    wanted = list(registry) if claims is None else list(claims)
    unknown = [c for c in wanted if c not in registry]
    if unknown:
        raise GraphError(f"unknown claim id(s): {', '.join(unknown)}")
    corpus = Corpus(config)
    start = time.perf_counter()
    results = []
    for cid in sorted(wanted):
        claim = registry[cid]
        res = run_claim(claim, claim.corpus(corpus))
        results.append(res)
        if progress:
            progress(res)
    return VerifyReport(results, int((time.perf_counter() - start) * 1000))


def run_on(claim_id: str, instances: Iterable[Instance]) -> ClaimResult:
    """Evaluate one claim on caller-supplied instances."""
    registry = {c.claim_id: c for c in claim_registry()}
    if claim_id not in registry:
        raise GraphError(f"unknown claim id {claim_id!r}")
    return run_claim(registry[claim_id], instances)
