"""``orientdim`` command line: gen, dim, verify, ord.

Exit codes: 0 success, 1 usage or input error, 2 verification mismatch,
3 budget or feasibility refusal.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .digraph import DigraphError, distance_matrix, parse_digraph, serialize_digraph, to_dot
from .families import FamilyError, FamilySpec
from .orientations import (
    DEFAULT_EDGE_BUDGET,
    BudgetExceeded,
    UndirectedGraph,
    log_csv,
    ord_report,
    parse_graph_arg,
)
from .resolver import MODES, DimensionUndefinedError, metric_dimension, result_document
from .verify import DEFAULT_RANGES, THEOREMS, InfeasibleRange, verify

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    """``a..b`` (inclusive), ``a`` or ``a,b,c`` (returned as a list)."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return range(int(lo), int(hi) + 1)
        if "," in text:
            return [int(p) for p in text.split(",")]  # type: ignore[return-value]
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use a..b, a or a,b,c") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


_FLAT_LIST = re.compile(r"\[[^\[\]{}]*\]")


def _dump(doc, out: str | None) -> None:
    text = json.dumps(doc, indent=2)
    # Keep innermost lists (arcs, vectors) on one line.
    text = _FLAT_LIST.sub(lambda m: json.dumps(json.loads(m.group())), text)
    _emit(text + "\n", out)


def cmd_gen(args) -> int:
    spec = FamilySpec.parse(args.spec)
    D = spec.build()
    if args.format == "dot":
        text = f"// {spec}\n" + to_dot(D)
    else:
        text = f"# {spec}\n" + serialize_digraph(D)
    _emit(text, args.out)
    return EXIT_OK


def cmd_dim(args) -> int:
    if args.spec and args.input:
        raise UsageError("give either an edge-list file or --spec, not both")
    if args.spec:
        D = FamilySpec.parse(args.spec).build()
    elif args.input:
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
        D = parse_digraph(text)
    else:
        raise UsageError("dim needs an edge-list file or --spec")
    dm = distance_matrix(D)
    result = metric_dimension(dm, args.mode, collect_all=args.all)
    doc = result_document(D, result, dm)
    if args.spec:
        doc = {"spec": args.spec, **doc}
    _dump(doc, args.out)
    return EXIT_OK


def _format_table(rows) -> str:
    header = f"{'spec':<52} {'formula':>7} {'brute':>5}  status"
    lines = [header, "-" * len(header)]
    for r in rows:
        status = "match" if r.match else ("FLAGGED" if r.flagged else "MISMATCH")
        formula = "-" if r.formula is None else str(r.formula)
        brute = "-" if r.brute_force is None else str(r.brute_force)
        lines.append(f"{r.spec:<52} {formula:>7} {brute:>5}  {status}")
        for note in r.notes:
            lines.append(f"    note: {note}")
    failed = sum(r.failed for r in rows)
    flagged = sum(r.flagged for r in rows)
    lines.append(f"{len(rows)} rows, {failed} mismatched, {flagged} flagged")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    ranges = {"n": args.n, "m": args.m, "x": args.x, "t": args.t, "len": args.len}
    allowed = DEFAULT_RANGES[args.theorem]
    for key, value in ranges.items():
        if value is not None and key not in allowed:
            raise UsageError(f"{args.theorem} takes no --{key} range")
    rows = verify(args.theorem, **ranges)
    if args.json:
        _dump([r.to_document() for r in rows], args.out)
    else:
        _emit(_format_table(rows), args.out)
    return EXIT_MISMATCH if any(r.failed for r in rows) else EXIT_OK


def _ord_graph(text: str) -> UndirectedGraph:
    if text.startswith("file:"):
        D = parse_digraph(Path(text[5:]).read_text())
        return UndirectedGraph.underlying(D)
    try:
        return parse_graph_arg(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_ord(args) -> int:
    G = _ord_graph(args.graph)
    report = ord_report(
        G, args.mode, budget=args.budget, workers=args.workers, keep_log=bool(args.csv)
    )
    doc = {"graph": args.graph, **report.to_document(G)}
    _dump(doc, args.out)
    if args.csv:
        Path(args.csv).write_text(log_csv(report))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orientdim", description="Directed metric dimension of oriented wheels, fans and cycle amalgamations."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a family member")
    p.add_argument("spec", help="e.g. wheel-c3simple:n=6,variant=A or path-amal:x=2,lengths=4+5+6")
    p.add_argument("--format", choices=("edgelist", "dot"), default="edgelist")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("dim", help="exact directed metric dimension")
    p.add_argument("input", nargs="?", help="edge-list file, or - for stdin")
    p.add_argument("--spec", help="family spec string instead of a file")
    p.add_argument("--mode", choices=MODES, default="require-strong")
    p.add_argument("--all", action="store_true", help="list every minimum basis")
    p.add_argument("--out")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("verify", help="check a theorem's formula against brute force")
    p.add_argument("theorem", choices=THEOREMS)
    for key in ("n", "m", "x", "t", "len"):
        p.add_argument(f"--{key}", type=parse_range)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ord", help="exhaustive ORD and dimension spectrum")
    p.add_argument("graph", help="wheel:n, fan:m:n, cycle:n, complete:n or file:PATH")
    p.add_argument("--mode", choices=MODES, default="require-strong")
    p.add_argument("--budget", type=int, default=DEFAULT_EDGE_BUDGET, help="maximum edge count")
    p.add_argument("--workers", type=int, help="default: $ORIENTDIM_WORKERS or CPU count")
    p.add_argument("--csv", help="write a per-orientation log to this file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_ord)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (BudgetExceeded, InfeasibleRange) as exc:
        print(f"orientdim: refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, FamilyError, DigraphError, DimensionUndefinedError, OSError) as exc:
        print(f"orientdim: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
