"""Command-line interface.

Exit codes: 0 success, 1 domain failure (bad value, invalid cover, cap
overflow), 2 usage error.  Standard output is deterministic for identical
inputs; timing and progress notes go to standard error.
"""

from __future__ import annotations

import argparse
import sys

from .closedforms import (
    max_partition_product,
    max_with_ones,
    min_separating_sets,
    perrin,
)
from .complexity import (
    complexity_csv,
    complexity_table,
    graph_from_expression,
    minimal_expression,
)
from .covers import (
    CoverValidationError,
    cover_from_graph,
    cover_to_json,
    graph_from_cover,
    minimal_cover,
    read_cover_json,
    validate_cover,
    write_cover_json,
)
from .expressions import ExpressionSyntaxError, format_expression, parse_expression
from .graphs import (
    MisCapError,
    Variant,
    count_mis,
    enumerate_mis,
    extremal_graph,
    graph_to_text,
    read_graph_text,
    write_graph_text,
)
from .oracles import run_verification


def _emit_graph(g, out: str | None) -> None:
    if out:
        write_graph_text(g, out)
        print(f"wrote graph ({g.n} vertices) to {out}", file=sys.stderr)
    else:
        sys.stdout.write(graph_to_text(g))


def _emit_cover(cover, out: str | None) -> None:
    if out:
        write_cover_json(cover, out)
        print(
            f"wrote cover ({cover.ground_size} elements, {len(cover.sets)} sets) "
            f"to {out}",
            file=sys.stderr,
        )
    else:
        sys.stdout.write(cover_to_json(cover))


def _cmd_ell(args) -> int:
    print(max_partition_product(args.n))
    return 0


def _cmd_s(args) -> int:
    print(min_separating_sets(args.m))
    return 0


def _cmd_perrin(args) -> int:
    print(perrin(args.j))
    return 0


def _cmd_maxones(args) -> int:
    print(max_with_ones(args.n))
    return 0


def _cmd_complexity(args) -> int:
    table = complexity_table(args.max)
    csv = complexity_csv(table)
    if args.csv:
        with open(args.csv, "w") as f:
            f.write(csv)
        print(f"wrote {args.max} rows to {args.csv}", file=sys.stderr)
    else:
        sys.stdout.write(csv)
    return 0


def _cmd_expr(args) -> int:
    table = complexity_table(args.m)
    e = minimal_expression(args.m, table)
    print(format_expression(e))
    print(f"value {e.value}")
    print(f"ones {e.ones}")
    return 0


def _cmd_expr_graph(args) -> int:
    g = graph_from_expression(parse_expression(args.expression))
    _emit_graph(g, args.out)
    return 0


def _cmd_mis(args) -> int:
    g = read_graph_text(args.graph)
    if args.count:
        print(count_mis(g))
    else:
        for s in enumerate_mis(g):
            print(" ".join(map(str, s.members())))
    return 0


def _cmd_extremal(args) -> int:
    variant = {
        None: Variant.DEFAULT,
        "two-edges": Variant.TWO_EDGES,
        "k4": Variant.K4,
    }[args.variant]
    _emit_graph(extremal_graph(args.n, variant), args.out)
    return 0


def _cmd_cover_from_graph(args) -> int:
    _emit_cover(cover_from_graph(read_graph_text(args.graph)), args.out)
    return 0


def _cmd_graph_from_cover(args) -> int:
    _emit_graph(graph_from_cover(read_cover_json(args.cover)), args.out)
    return 0


def _cmd_minimal_cover(args) -> int:
    _emit_cover(minimal_cover(args.m), args.out)
    return 0


def _cmd_validate_cover(args) -> int:
    report = validate_cover(read_cover_json(args.cover))
    print(f"covering {'yes' if report.covering else 'no'}")
    print(f"separating {'yes' if report.separating else 'no'}")
    if report.uncovered is not None:
        print(f"uncovered {report.uncovered}")
    if report.unseparated is not None:
        print(f"unseparated {report.unseparated[0]} {report.unseparated[1]}")
    return 0 if report.valid else 1


def _cmd_verify(args) -> int:
    reports = run_verification(args.level)
    for r in reports:
        print(r.tsv_line(include_elapsed=False))
    failures = sum(not r.agree for r in reports)
    total_time = sum(r.elapsed for r in reports)
    print(
        f"{len(reports)} checks, {failures} disagreements, {total_time:.2f}s",
        file=sys.stderr,
    )
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="miscover",
        description=(
            "Maximum-product partitions, separating covers, maximal "
            "independent sets, and integer complexity."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ell", help="largest product of integers summing to N")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_ell)

    p = sub.add_parser("s", help="minimum sets in a separating cover on M elements")
    p.add_argument("m", type=int)
    p.set_defaults(func=_cmd_s)

    p = sub.add_parser("perrin", help="J-th Perrin number (MIS count of the J-cycle)")
    p.add_argument("j", type=int)
    p.set_defaults(func=_cmd_perrin)

    p = sub.add_parser("maxones", help="largest integer expressible with N ones")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_maxones)

    p = sub.add_parser("complexity", help="integer complexity table as 'm,c' lines")
    p.add_argument("--max", type=int, required=True, metavar="N")
    p.add_argument("--csv", metavar="PATH", help="write to file instead of stdout")
    p.set_defaults(func=_cmd_complexity)

    p = sub.add_parser("expr", help="a minimal expression for M")
    p.add_argument("m", type=int)
    p.set_defaults(func=_cmd_expr)

    p = sub.add_parser("expr-graph", help="graph built from an expression")
    p.add_argument("expression")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_expr_graph)

    p = sub.add_parser("mis", help="maximal independent sets of a graph file")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--count", action="store_true")
    mode.add_argument("--list", action="store_true")
    p.add_argument("--graph", required=True, metavar="PATH")
    p.set_defaults(func=_cmd_mis)

    p = sub.add_parser("extremal", help="N-vertex graph with the most MISes")
    p.add_argument("n", type=int)
    p.add_argument("--variant", choices=["two-edges", "k4"])
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("cover-from-graph", help="separating cover from a graph's MISes")
    p.add_argument("--graph", required=True, metavar="PATH")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_cover_from_graph)

    p = sub.add_parser("graph-from-cover", help="disjointness graph of a cover")
    p.add_argument("--cover", required=True, metavar="PATH")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_graph_from_cover)

    p = sub.add_parser("minimal-cover", help="smallest separating cover on M elements")
    p.add_argument("m", type=int)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_minimal_cover)

    p = sub.add_parser("validate-cover", help="check covering and separation")
    p.add_argument("--cover", required=True, metavar="PATH")
    p.set_defaults(func=_cmd_validate_cover)

    p = sub.add_parser("verify", help="run the brute-force agreement suite")
    p.add_argument("--level", choices=["quick", "full"], default="quick")
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv: list[str] | None = None) -> int:
    """Dispatch one CLI invocation; returns the exit code instead of exiting."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        return args.func(args)
    except (ValueError, MisCapError, CoverValidationError, ExpressionSyntaxError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
