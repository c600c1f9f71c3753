"""Command-line interface: ``soltes <command> ...`` (or ``python -m soltes``).

Graphs are read from ``--input`` or standard input as graph6 or edge-list
text (auto-detected unless ``--format`` is given) and written as graph6 by
default.  Reports are JSON carrying ``"schema": 1``.

Exit codes: 0 success; 1 bad input; 2 scan finished with undecodable
records; 3 ``props`` found a counterexample; 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import bounds, census, families, metrics, props, smallgraphs, transforms
from .errors import BadParameterError, EmptyStreamError, Graph6Error, GraphError
from .graph import Graph, iter_edgelist, write_edgelist
from .graph6 import encode_graph6, iter_graph6

EXIT_INPUT = 1
EXIT_DECODE = 2
EXIT_COUNTEREXAMPLE = 3
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# -- I/O helpers -----------------------------------------------------------------


def _read_text(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _looks_like_edgelist(text: str) -> bool:
    for line in text.splitlines():
        tok = line.split("#", 1)[0].split()
        if tok:
            return len(tok) == 2 and all(t.isdigit() for t in tok)
    return False


def _parse_graphs(text: str, fmt: str) -> list[Graph]:
    if fmt == "auto":
        fmt = "edgelist" if _looks_like_edgelist(text) else "graph6"
    if fmt == "edgelist":
        return list(iter_edgelist(text.splitlines()))
    return list(iter_graph6(text.splitlines()))


def _read_graph(args) -> Graph:
    graphs = _parse_graphs(_read_text(args.input), args.format)
    if len(graphs) != 1:
        raise GraphError(f"expected one graph on input, found {len(graphs)}")
    return graphs[0]


def _emit_graph(G: Graph, how: str) -> str:
    return write_edgelist(G) if how == "edgelist" else encode_graph6(G) + "\n"


def _write(text: str, path: str | None = None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=1) + "\n"


def _add_input(p, default_format="auto"):
    p.add_argument("--input", "-i", help="input file (default: standard input)")
    p.add_argument("--format", choices=["auto", "graph6", "edgelist"], default=default_format,
                   help="input format (default: %(default)s)")


def _add_graph_output(p):
    p.add_argument("--emit", choices=["graph6", "edgelist"], default="graph6",
                   help="output format for graphs (default: %(default)s)")
    p.add_argument("--output", "-o", help="output file (default: standard output)")


def _workers(p):
    p.add_argument("--workers", "-w", type=int, default=os.cpu_count() or 1,
                   help="worker threads (default: available cores)")


# -- commands ----------------------------------------------------------------------


def cmd_wiener(args):
    G = _read_graph(args)
    _write(_dump({"schema": 1, "n": G.n, "m": G.m, "wiener": metrics.wiener(G)}), args.output)


def cmd_classify(args):
    G = _read_graph(args)
    c = metrics.classify_vertices(G, workers=args.workers)
    _write(c.to_csv() if args.emit == "csv" else c.to_json(indent=1) + "\n", args.output)


def cmd_arcgraph(args):
    G = _read_graph(args)
    A, index = transforms.arc_graph(G)
    if args.index_json:
        _write(index.to_json(indent=1) + "\n", args.index_json)
    _write(_emit_graph(A, args.emit), args.output)


def cmd_gen(args):
    G = families.generate(args.family.lower(), n=args.n, k=args.k)
    _write(_emit_graph(G, args.emit), args.output)


def cmd_balance(args):
    enforce = not args.allow_small_x
    if args.edge is None:
        plan = transforms.balancer_plan(args.x, args.k, enforce)
        _write(_dump({"schema": 1, "plan": plan.to_dict()}), args.output)
        return
    G = _read_graph(args)
    H, plan = transforms.append_balancer(G, args.edge[0], args.edge[1], args.x, args.k, enforce)
    out = {"schema": 1, "plan": plan.to_dict(), "graph6": encode_graph6(H)}
    _write(_dump(out), args.output)


def cmd_q_construct(args):
    G = _read_graph(args)
    _write(_emit_graph(transforms.construct_q(G, tuple(args.edge)), args.emit), args.output)


def cmd_bounds(args):
    _write(_dump(bounds.bounds_record(args.d, args.g, args.threshold)), args.output)


def cmd_scan(args):
    flt = census.ScanFilter(
        min_degree_at_least=args.min_degree,
        require_diameter_at_least=args.min_diameter,
        classify_fully=not args.no_classify,
        vertex_transitive=args.vertex_transitive,
    )
    fmt = "graph6" if args.format == "auto" else args.format
    if args.input in (None, "-"):
        report = census.scan(census.open_records(sys.stdin, fmt), flt, args.workers, fmt)
    else:
        with open(args.input, encoding="ascii") as fh:
            report = census.scan(census.open_records(fh, fmt), flt, args.workers, fmt)
    _write(report.to_json(), args.output)
    return EXIT_DECODE if report.decode_errors else 0


def cmd_props(args):
    corpus: list[Graph] = []
    if args.input:
        corpus += _parse_graphs(_read_text(args.input), args.format)
    if args.max_n:
        for n in range(1, args.max_n + 1):
            corpus += smallgraphs.connected_graphs(n)
    if args.random:
        corpus += smallgraphs.random_connected_graphs(args.random, args.random_max_n, args.seed)
    if not corpus:
        raise UsageError("props: give --input, --max-n or --random")
    tallies = props.run_suite(corpus)
    out = {
        "schema": 1,
        "graphs": len(corpus),
        "propositions": {
            name: {"applied": t.applied, "counterexamples": t.counterexamples}
            for name, t in tallies.items()
        },
    }
    _write(_dump(out), args.output)
    return EXIT_COUNTEREXAMPLE if any(t.counterexamples for t in tallies.values()) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="soltes", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("wiener", help="Wiener index of one graph")
    _add_input(p)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_wiener)

    p = sub.add_parser("classify", help="per-vertex W(G) - W(G-v) report")
    _add_input(p)
    _workers(p)
    p.add_argument("--emit", choices=["json", "csv"], default="json")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("arcgraph", help="arc-graph of the input graph")
    _add_input(p)
    _add_graph_output(p)
    p.add_argument("--index-json", help="also write the arc index [{arc_id, tail, head}] here")
    p.set_defaults(func=cmd_arcgraph)

    p = sub.add_parser("gen", help="generate a named family member")
    p.add_argument("family", help=", ".join(families.FAMILIES))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    _add_graph_output(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("balance", help="compensating tree for distance sum x")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--edge", type=int, nargs=2, metavar=("U", "V"),
                   help="attach to this edge of the input graph")
    p.add_argument("--allow-small-x", action="store_true", help="accept x <= 16k^2 when it fits")
    _add_input(p)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_balance)

    p = sub.add_parser("q-construct", help="hang the 112-vertex 7460 compensator on an edge")
    p.add_argument("--edge", type=int, nargs=2, metavar=("U", "V"), required=True)
    _add_input(p)
    _add_graph_output(p)
    p.set_defaults(func=cmd_q_construct)

    p = sub.add_parser("bounds", help="Moore bound and the d=7 detour/transmission estimates")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--threshold", type=int, default=1000, help="gap must exceed threshold*k^2")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("scan", help="classify every graph of a file")
    _add_input(p, default_format="graph6")
    _workers(p)
    p.add_argument("--min-degree", type=int)
    p.add_argument("--min-diameter", type=int)
    p.add_argument("--vertex-transitive", action="store_true",
                   help="trust that every record is vertex-transitive (enables the order prefilter)")
    p.add_argument("--no-classify", action="store_true")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("props", help="check the structural statements on a corpus")
    _add_input(p)
    p.add_argument("--max-n", type=int, help="all connected graphs up to this order (needs pynauty)")
    p.add_argument("--random", type=int, default=0, help="number of random connected graphs")
    p.add_argument("--random-max-n", type=int, default=40)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_props)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args) or 0
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, Graph6Error, BadParameterError, EmptyStreamError, OSError, ImportError) as exc:
        print(f"soltes: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
