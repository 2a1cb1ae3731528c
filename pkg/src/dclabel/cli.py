"""Command-line interface.

Exit codes: 0 positive answer, 1 negative answer, 2 bad input or
configuration, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .construction import label_graph
from .errors import EnumerationCapError, GraphInputError
from .generators import FAMILIES, GeneratorSpec, generate
from .graph import (
    Graph,
    Labeling,
    export_dot,
    parse_graph,
    parse_labeling,
    serialize_graph,
    serialize_labeling,
)
from .qian import find_forbidden_configuration
from .realization import (
    DEFAULT_MAX_VECTORS,
    degree_vectors,
    enumerate_condition_1_vectors,
    format_vector,
    is_degree_complete_oracle,
    parse_vector,
    realize,
)
from .recognition import Decomposition, has_degree_complete_labeling

EXIT_YES, EXIT_NO, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3
DEFAULT_MAX_ORIENTATIONS = 2**20


def _read_text(source: str, stdin) -> str:
    if source == "-":
        return stdin.read()
    try:
        return Path(source).read_text()
    except OSError as exc:
        raise GraphInputError(f"cannot read {source}: {exc.strerror}") from None


def _load_graph(args, stdin) -> Graph:
    return parse_graph(_read_text(args.graph, stdin))


def _load_labeling(path: str | None, n: int, stdin) -> Labeling | None:
    if path is None:
        return None
    return parse_labeling(_read_text(path, stdin), n)


def _fmt_set(items) -> str:
    return " ".join(str(x) for x in sorted(items))


def _fmt_edges(edges) -> str:
    return " ".join(f"{u}-{v}" for u, v in sorted(edges))


def _print_decomposition(dec: Decomposition, out) -> None:
    print(f"X1: {_fmt_set(dec.x1)}", file=out)
    if dec.route == "iii":
        print(f"X2: {_fmt_set(dec.x2)}", file=out)
    else:
        print(f"F: {_fmt_edges(dec.f)}", file=out)
    for path in dec.paths:
        print("path: " + " ".join(map(str, path)), file=out)


def cmd_check(args, stdin, out) -> int:
    g = _load_graph(args, stdin)
    ok, evidence = has_degree_complete_labeling(g, args.route)
    if ok:
        print("YES", file=out)
        print(f"route: {evidence.route}", file=out)
        _print_decomposition(evidence, out)
        return EXIT_YES
    print(f"NO {evidence}", file=out)
    print(f"edges: {_fmt_edges(evidence.edges)}", file=out)
    return EXIT_NO


def cmd_label(args, stdin, out) -> int:
    g = _load_graph(args, stdin)
    result = label_graph(g, args.method)
    if not isinstance(result, Labeling):
        print(f"NO {result}", file=out)
        return EXIT_NO
    out.write(serialize_labeling(result))
    if args.dot:
        Path(args.dot).write_text(export_dot(g, result))
    return EXIT_YES


def cmd_verify(args, stdin, out) -> int:
    g = _load_graph(args, stdin)
    f = _load_labeling(args.labeling, g.n, stdin)
    if f is not None:
        g = f.apply(g)
    w = find_forbidden_configuration(g)
    if w is None:
        print("DEGREE-COMPLETE", file=out)
        return EXIT_YES
    print(f"NOT-DEGREE-COMPLETE {w}", file=out)
    return EXIT_NO


def cmd_oracle(args, stdin, out) -> int:
    g = _load_graph(args, stdin)
    f = _load_labeling(args.labeling, g.n, stdin)
    if f is not None:
        g = f.apply(g)
    if args.brute:
        if 2**g.m > args.max_orientations:
            raise EnumerationCapError("orientation", args.max_orientations)
        realizable = degree_vectors(g, max_edges=g.m)
        for s in enumerate_condition_1_vectors(g, args.max_vectors):
            if s not in realizable:
                print(f"NOT-DEGREE-COMPLETE {format_vector(s)}", file=out)
                return EXIT_NO
        print("DEGREE-COMPLETE", file=out)
        return EXIT_YES
    ok, s = is_degree_complete_oracle(g, args.max_vectors)
    if ok:
        print("DEGREE-COMPLETE", file=out)
        return EXIT_YES
    print(f"NOT-DEGREE-COMPLETE {format_vector(s)}", file=out)
    return EXIT_NO


def cmd_realize(args, stdin, out) -> int:
    g = _load_graph(args, stdin)
    s = parse_vector(args.vector)
    if len(s) != g.n:
        raise GraphInputError(f"--vector has {len(s)} entries, graph has {g.n} vertices")
    d = realize(g, s)
    if d is None:
        print("NOT-REALIZABLE", file=out)
        return EXIT_NO
    for tail, head in d.arcs:
        print(f"{tail} {head}", file=out)
    return EXIT_YES


def cmd_gen(args, stdin, out) -> int:
    spec = GeneratorSpec(args.family, n=args.n, m=args.m, k=args.k, seed=args.seed)
    out.write(serialize_graph(generate(spec)))
    return EXIT_YES


def cmd_export_dot(args, stdin, out) -> int:
    g = _load_graph(args, stdin)
    text = export_dot(g, _load_labeling(args.labeling, g.n, stdin))
    if args.dot:
        Path(args.dot).write_text(text)
    else:
        out.write(text)
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="dclabel",
        description="Degree complete labelings: recognize, construct, verify.",
        epilog="Exit codes: 0 yes, 1 no, 2 input/config error, 3 enumeration cap exceeded.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def graph_arg(sp):
        sp.add_argument("graph", nargs="?", default="-", help="edge-list file, '-' for stdin (default)")

    sp = sub.add_parser("check", help="decide whether the graph has a degree complete labeling")
    graph_arg(sp)
    sp.add_argument("--route", choices=("iii", "iv", "ii"), default="iii",
                    help="iii: delete leaves and apexes; iv: delete leaves and F edges; "
                         "ii: search T1/T2/long cycles first")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("label", help="print a degree complete labeling ('vertex label' lines)")
    graph_arg(sp)
    sp.add_argument("--method", choices=("x2", "f"), default="x2",
                    help="x2: insert triangle apexes into the path; f: drop one edge per triangle")
    sp.add_argument("--dot", metavar="PATH", help="also write a DOT drawing of the labeled graph")
    sp.set_defaults(func=cmd_label)

    sp = sub.add_parser("verify", help="check a labeled graph for crossing or nested edge pairs")
    graph_arg(sp)
    sp.add_argument("--labeling", metavar="PATH", help="apply this labeling before verifying")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("oracle", help="brute-force degree completeness via realizability")
    graph_arg(sp)
    sp.add_argument("--labeling", metavar="PATH", help="apply this labeling first")
    sp.add_argument("--max-vectors", type=int, default=DEFAULT_MAX_VECTORS,
                    help="cap on candidate degree vectors (default %(default)s)")
    sp.add_argument("--max-orientations", type=int, default=DEFAULT_MAX_ORIENTATIONS,
                    help="cap on orientations for --brute (default %(default)s)")
    sp.add_argument("--brute", action="store_true",
                    help="compare against all orientations instead of matching")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("realize", help="find an orientation with a given out-degree vector")
    graph_arg(sp)
    sp.add_argument("--vector", required=True, help="comma-separated out-degrees, e.g. 0,2,1,0")
    sp.set_defaults(func=cmd_realize)

    sp = sub.add_parser("gen", help="generate a graph in edge-list format")
    sp.add_argument("family", choices=FAMILIES)
    sp.add_argument("--n", type=int, default=0, help="order (spine length for caterpillar)")
    sp.add_argument("--m", type=int, default=0, help="edge count for random_gnm")
    sp.add_argument("--k", type=int, default=0,
                    help="leaves per spine vertex (caterpillar) or triangles (triangle_chain)")
    sp.add_argument("--seed", type=int, default=0, help="random seed")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("export-dot", help="write Graphviz DOT")
    graph_arg(sp)
    sp.add_argument("--labeling", metavar="PATH", help="draw vertices on a line in label order")
    sp.add_argument("--dot", metavar="PATH", help="output file (default stdout)")
    sp.set_defaults(func=cmd_export_dot)
    return p


def run_cli(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_YES
    try:
        return args.func(args, stdin, stdout)
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_CAP
    except GraphInputError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
