"""Command line entry point: ``strongdim <command> ...``.

Exit codes: 0 success (or suite pass), 1 suite failure, 2 usage or input error.
Results go to stdout or the ``-o`` file, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import families as fam
from .graph import (
    INF,
    GraphError,
    components,
    diameter,
    has_true_twins,
    is_connected,
)
from .io import format_edgelist, read_edgelist, read_graph6
from .products import PRODUCTS
from .resolving import strong_resolving_graph, tf_strong_resolving_graph
from .solvers import bruteforce_basis, invariants, strong_metric_dimension
from .verify import CorpusConfig, run_suite

FAMILIES = ("path", "cycle", "complete", "empty", "star", "fan", "wheel", "grid",
            "random_tree", "random_graph", "all")


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _fmt_dist(d) -> str:
    return "inf" if d == INF else str(int(d))


def cmd_info(args) -> int:
    g = read_edgelist(args.file)
    degs = g.degrees()
    lines = [
        f"n = {g.n}",
        f"m = {g.m}",
        f"degrees: min {min(degs, default=0)}, max {max(degs, default=0)}",
        f"connected = {is_connected(g)}",
        f"components = {len(components(g))}",
    ]
    if g.n:
        lines.append(f"diameter = {_fmt_dist(diameter(g))}")
    lines.append(f"true twins present = {has_true_twins(g)}")
    print("\n".join(lines))
    return 0


def cmd_gen(args) -> int:
    if args.graph6:
        graphs = read_graph6(args.graph6)
        _emit("\n".join(format_edgelist(g) for g in graphs), args.output)
        return 0
    if args.family is None or args.n is None:
        raise GraphError("gen needs --family and --n (or --graph6 FILE)")
    if args.family == "all":
        text = "\n".join(format_edgelist(g) for g in fam.all_graphs(args.n))
        _emit(text, args.output)
        return 0
    kind = args.family
    spec = fam.FamilySpec(kind, args.n, n2=args.n2, p=args.p, seed=args.seed)
    _emit(format_edgelist(fam.generate(spec)), args.output)
    return 0


def cmd_product(args) -> int:
    g, h = read_edgelist(args.a), read_edgelist(args.b)
    _emit(format_edgelist(PRODUCTS[args.op](g, h)), args.output)
    return 0


def cmd_srgraph(args) -> int:
    g = read_edgelist(args.file)
    derived = tf_strong_resolving_graph(g) if args.tf else strong_resolving_graph(g)
    _emit(format_edgelist(derived.graph), args.output)
    mapping = "".join(f"{new} {old}\n" for new, old in enumerate(derived.vertex_map))
    if args.map:
        Path(args.map).write_text(mapping)
    elif not args.output:
        sys.stdout.write("# vertex map (new old)\n" + mapping)
    return 0


def cmd_invariants(args) -> int:
    bundle = invariants(read_edgelist(args.file))
    if args.json:
        print(json.dumps(bundle.as_dict(), sort_keys=True))
    else:
        for key, value in bundle.as_dict().items():
            print(f"{key} = {'undefined' if value is None else value}")
    return 0


def cmd_dims(args) -> int:
    g = read_edgelist(args.file)
    if args.method == "bruteforce":
        witness = bruteforce_basis(g)
    else:
        witness = strong_metric_dimension(g).witness
    print(f"dim_s = {len(witness)}")
    print("witness = {" + ", ".join(map(str, witness)) + "}")
    return 0


def cmd_verify(args) -> int:
    claims = None if args.suite == "all" else [c.strip() for c in args.suite.split(",") if c.strip()]
    config = CorpusConfig(
        max_order=args.max_order,
        random_pairs=args.random,
        seed=args.seed,
    )

    def progress(res):
        status = "PASS" if res.passed else "FAIL"
        print(f"{status} {res.id}: checked={res.checked} skipped={res.skipped} "
              f"failures={len(res.failures)}", flush=True)
        for f in res.failures[:5]:
            print(f"    {f.instance}: expected {f.expected}; got {f.got}", file=sys.stderr)

    report = run_suite(config, claims, progress=progress)
    print(f"{'PASS' if report.passed else 'FAIL'} overall ({report.runtime_ms} ms)")
    if args.json:
        Path(args.json).write_text(report.to_json() + "\n")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="strongdim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="basic facts about a graph")
    p.add_argument("file")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("gen", help="generate a family member or ingest graph6")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--n2", type=int, help="second side for grids")
    p.add_argument("--p", type=float, default=0.5, help="edge probability (random_graph)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--graph6", metavar="FILE", help="convert a graph6 corpus to edge-list blocks")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("product", help="product of two graphs")
    p.add_argument("--op", choices=sorted(PRODUCTS), required=True)
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("srgraph", help="strong resolving graph (or TF-graph with --tf)")
    p.add_argument("file")
    p.add_argument("--tf", action="store_true")
    p.add_argument("-o", "--output")
    p.add_argument("--map")
    p.set_defaults(func=cmd_srgraph)

    p = sub.add_parser("invariants", help="alpha, beta, omega, varpi, diameter, dim_s")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("dims", help="strong metric dimension with a witness basis")
    p.add_argument("file")
    p.add_argument("--method", choices=("sr-cover", "bruteforce"), default="sr-cover")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("verify", help="run the theorem suite")
    p.add_argument("--suite", default="all", help="'all' or comma separated claim ids")
    p.add_argument("--max-order", type=int, default=4)
    p.add_argument("--random", type=int, default=100, help="number of random factor pairs")
    p.add_argument("--seed", type=int, default=CorpusConfig.seed)
    p.add_argument("--json", metavar="OUT")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, OSError) as exc:
        print(f"strongdim {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
