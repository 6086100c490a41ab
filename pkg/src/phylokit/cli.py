"""Command-line interface.

Subcommands: ``compute`` (value with optional witness file), ``verify``
(check a digraph certifies a graph), ``bounds``, ``census``, ``sweep``
(exhaustive small-graph verification), ``family`` (the p - k + 1 = l
graphs), ``catalog`` (worked examples) and ``export-dot``.

Exit codes: 0 success, 1 invalid certificate in ``verify``, 2 unreadable
or malformed input, 3 size cap exceeded without --force, 4 sweep found a
disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .derived import certificate_to_dot, digraph_to_dot, graph_to_dot, validate_phylogeny_digraph
from .errors import (
    CapExceeded,
    CertificateError,
    ParseError,
    PhylokitError,
    TooLarge,
    UnknownName,
)
from .exact import SOLVER_CAP_DEFAULT
from .formulas import (
    bounds_k4free,
    difference_family,
    lower_bound_clique_cover,
    phylogeny_number_auto,
)
from .generate import graph6_encode
from .graphs import (
    Digraph,
    Graph,
    format_digraph,
    format_graph,
    parse_digraph,
    parse_graph,
)
from .structure import census_json
from .sweep import SweepOptions, run_sweep, sweep_graphs
from .witness import FIGURE_NAMES, figure_catalog

EXIT_OK = 0
EXIT_INVALID_CERTIFICATE = 1
EXIT_PARSE = 2
EXIT_TOO_LARGE = 3
EXIT_SWEEP_DISAGREEMENT = 4


def _read_graph(path: str) -> Graph:
    try:
        return parse_graph(Path(path).read_text())
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _read_digraph(path: str) -> Digraph:
    try:
        return parse_digraph(Path(path).read_text())
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def cmd_compute(args: argparse.Namespace) -> int:
    graph = _read_graph(args.file)
    cap = graph.n if args.force else args.max_n
    deadline = None
    if args.time_budget_ms is not None:
        deadline = time.monotonic() + args.time_budget_ms / 1000.0
    started = time.perf_counter()
    try:
        result = phylogeny_number_auto(
            graph,
            cap=cap,
            want_witness=args.witness is not None,
            max_extras=args.max_extras,
            deadline=deadline,
        )
    except TooLarge as exc:
        print(f"error: {exc} (pass --force to search anyway)", file=sys.stderr)
        return EXIT_TOO_LARGE
    payload = result.to_json()
    payload["graph"] = {"n": graph.n, "m": graph.m}
    payload["elapsed_ms"] = int((time.perf_counter() - started) * 1000)
    if args.witness is not None:
        witness = result.witness
        text = format_digraph(
            witness.digraph,
            trailing=f"base 0..{graph.n - 1}",
        )
        Path(args.witness).write_text(text)
        payload["witness_file"] = args.witness
    print(json.dumps(payload))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    graph = _read_graph(args.graph)
    digraph = _read_digraph(args.digraph)
    if digraph.n < graph.n:
        print(
            f"NotInduced: digraph has {digraph.n} vertices, fewer than the graph's {graph.n}",
            file=sys.stderr,
        )
        return EXIT_INVALID_CERTIFICATE
    try:
        cert = validate_phylogeny_digraph(digraph, range(graph.n), graph)
    except CertificateError as exc:
        print(f"{exc.clause}: {exc}", file=sys.stderr)
        return EXIT_INVALID_CERTIFICATE
    print(json.dumps({"valid": True, "extra_count": cert.extra_count}))
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    graph = _read_graph(args.file)
    payload: dict = {"graph": {"n": graph.n, "m": graph.m}}
    try:
        payload["clique_cover_lower"] = lower_bound_clique_cover(graph, cap=args.max_n).value
    except TooLarge:
        payload["clique_cover_lower"] = None
    try:
        outcome = bounds_k4free(graph)
        entry: dict = {"method": outcome.method}
        if outcome.kind == "exact":
            entry["exact"] = outcome.value
        else:
            entry["lower"] = outcome.lower
            entry["upper"] = outcome.upper
        payload["k4free_sandwich"] = entry
    except PhylokitError as exc:
        payload["k4free_sandwich"] = {"error": str(exc)}
    print(json.dumps(payload))
    return EXIT_OK


def cmd_census(args: argparse.Namespace) -> int:
    graph = _read_graph(args.file)
    print(json.dumps(census_json(graph, theta_cap=args.max_n)))
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.max_n > 8 and args.graph6 is None:
        print("error: the native generator is capped at --max-n 8", file=sys.stderr)
        return EXIT_PARSE
    lines = None
    if args.graph6 is not None:
        source = sys.stdin if args.graph6 == "-" else open(args.graph6)
        lines = source.read().splitlines()
        if source is not sys.stdin:
            source.close()
    options = SweepOptions(
        only_k4free_diamond_scope=args.only_k4free_diamond_scope,
        with_oracle=args.with_oracle,
        solver_cap=max(args.max_n, SOLVER_CAP_DEFAULT),
    )
    try:
        graphs = list(sweep_graphs(args.max_n, lines))
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    for record in run_sweep(graphs, options, threads=args.threads):
        print(json.dumps(record.to_json()))
        if not record.ok:
            bad = [name for name, ok in record.checks.items() if not ok]
            print(
                f"disagreement on {record.graph_id}: {', '.join(bad)}",
                file=sys.stderr,
            )
            print(f"graph6: {record.graph_id}", file=sys.stderr)
            from .generate import graph6_decode

            print(format_graph(graph6_decode(record.graph_id)), file=sys.stderr)
            return EXIT_SWEEP_DISAGREEMENT
    return EXIT_OK


def cmd_family(args: argparse.Namespace) -> int:
    try:
        graph, p_result, k = difference_family(args.l, verify_k=args.verify_k)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    payload = {
        "l": args.l,
        "n": graph.n,
        "m": graph.m,
        "p": p_result.value,
        "p_method": p_result.method,
        "k": k,
        "k_verified_exactly": bool(args.verify_k or args.l == 0),
        "identity": p_result.value - k + 1,
        "identity_ok": p_result.value - k + 1 == args.l,
    }
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        path = out_dir / f"family_{args.l}.graph"
        path.write_text(format_graph(graph, comment=f"difference family member l={args.l}"))
        payload["file"] = str(path)
    print(json.dumps(payload))
    return EXIT_OK


def cmd_catalog(args: argparse.Namespace) -> int:
    try:
        item = figure_catalog(args.name)
    except UnknownName as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if isinstance(item, Graph):
        text = format_graph(item, comment=f"catalog {args.name}")
        extra = {"kind": "graph", "n": item.n, "m": item.m, "graph6": graph6_encode(item)}
    else:
        digraph, base = item
        text = format_digraph(
            digraph,
            comment=f"catalog {args.name}",
            trailing=f"base 0..{len(base) - 1}",
        )
        extra = {"kind": "digraph", "n": digraph.n, "arcs": digraph.m}
    if args.out:
        Path(args.out).write_text(text)
        print(json.dumps({**extra, "file": args.out}))
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_export_dot(args: argparse.Namespace) -> int:
    if args.kind == "graph":
        dot = graph_to_dot(_read_graph(args.file))
    elif args.kind == "digraph":
        dot = digraph_to_dot(_read_digraph(args.file))
    else:
        digraph = _read_digraph(args.file)
        if args.base_size is None:
            print("error: --base-size is required for kind=certificate", file=sys.stderr)
            return EXIT_PARSE
        dot = certificate_to_dot(digraph, range(args.base_size))
    if args.out:
        Path(args.out).write_text(dot)
    else:
        sys.stdout.write(dot)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phylokit",
        description="Phylogeny (moral) graphs and exact phylogeny numbers of small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute the phylogeny number of an edge-list file")
    p.add_argument("file")
    p.add_argument("--witness", metavar="OUT", help="write a certifying digraph here")
    p.add_argument("--force", action="store_true", help="ignore the solver size cap")
    p.add_argument("--max-n", type=int, default=SOLVER_CAP_DEFAULT, help="solver size cap")
    p.add_argument("--max-extras", type=int, default=None, help="fail instead of deepening past this")
    p.add_argument("--time-budget-ms", type=int, default=None, help="fail when the search exceeds this")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check that a digraph certifies a graph")
    p.add_argument("graph")
    p.add_argument("digraph")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="lower/upper bounds without full search")
    p.add_argument("file")
    p.add_argument("--max-n", type=int, default=SOLVER_CAP_DEFAULT)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("census", help="triangle/diamond census as JSON")
    p.add_argument("file")
    p.add_argument("--max-n", type=int, default=SOLVER_CAP_DEFAULT)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("sweep", help="verify all claims over all small connected graphs")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--graph6", metavar="FILE", help="read graph6 lines from FILE ('-' = stdin)")
    p.add_argument(
        "--only-k4free-diamond-scope",
        action="store_true",
        help="restrict to K4-free graphs with pairwise edge-disjoint diamonds",
    )
    p.add_argument("--with-oracle", action="store_true", help="cross-check with the brute-force oracle")
    p.add_argument("--threads", type=int, default=None, help="overrides PHYLOKIT_THREADS")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("family", help="emit the graph with p - k + 1 = l")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--out", metavar="DIR")
    p.add_argument("--verify-k", action="store_true", help="recompute the competition number exactly")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("catalog", help="print a worked-example graph or digraph")
    p.add_argument("name", choices=list(FIGURE_NAMES))
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("export-dot", help="DOT rendering of a graph, digraph or certificate")
    p.add_argument("file")
    p.add_argument("out", nargs="?", default=None)
    p.add_argument("--kind", choices=["graph", "digraph", "certificate"], default="graph")
    p.add_argument("--base-size", type=int, default=None)
    p.set_defaults(func=cmd_export_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
