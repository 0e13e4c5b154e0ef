"""Command-line front end.

Subcommands: solve, count, enum, verify, expand, stats. Input is a DIMACS
CNF file, or standard input when the path is ``-``. Exit codes: 0 success,
1 usage error, 2 file/parse error, 3 verification failure, 4 resource cap
(row limit or oracle limit) hit. Trace output goes to stderr so stdout stays
machine-readable.
"""
from __future__ import annotations

import argparse
import json
import sys

from .engine import Options, RowLimitExceeded, Solution, emit_trace, solve
from .formula import Cnf, DimacsError, parse_dimacs
from .oracle import DEFAULT_LIMIT, OracleLimitError, check_partition
from .rows import Row


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we want exit 1
        raise UsageError(message)


def _build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("input", help="DIMACS CNF file, or - for standard input")
    common.add_argument("--no-prune", action="store_true", help="keep infeasible sons instead of discarding them")
    common.add_argument("--trace", action="store_true", help="write a step-by-step run log to stderr")
    common.add_argument("--format", choices=("text", "json"), default="text", help="output format")
    common.add_argument("--max-rows", type=int, metavar="N", help="abort once more than N final rows were emitted")
    common.add_argument("--oracle-limit", type=int, default=DEFAULT_LIMIT, metavar="T",
                        help="largest variable count the brute-force oracle accepts")

    parser = _Parser(prog="wildsat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    sub.add_parser("solve", parents=[common], help="print the final rows and totals")
    sub.add_parser("count", parents=[common], help="print row and model totals only")
    sub.add_parser("enum", parents=[common], help="print every model as a 0/1 line")
    sub.add_parser("verify", parents=[common], help="check the row list against the brute-force oracle")
    sub.add_parser("expand", parents=[common], help="print the plain 0/1/2 expansion of the solution")
    sub.add_parser("stats", parents=[common], help="print run statistics")
    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _row_lines(rows) -> list[str]:
    return [row.text() for row in rows]


def _solution(cnf: Cnf, args) -> Solution:
    opts = Options(prune=not args.no_prune, max_rows=args.max_rows, trace=args.trace)
    result = solve(cnf, opts)
    if args.trace and result.trace:
        print(emit_trace(result.trace), file=sys.stderr)
    return result


def _emit(payload: dict, text_lines: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _stats_payload(result: Solution, expanded: list[Row]) -> dict:
    k = len(result.final_rows)
    ratio = result.model_count / k if k else 0.0
    return {
        "rows": k,
        "models": str(result.model_count),
        "ratio": round(ratio, 2),
        "expanded_rows": len(expanded),
        "impositions": result.stats.impositions,
        "rows_produced": result.stats.rows_produced,
        "prune_calls": result.stats.prune_calls,
        "prune_hits": result.stats.prune_hits,
    }


def main(argv: list[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1

    try:
        cnf = parse_dimacs(_read_input(args.input))
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return 2
    except DimacsError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2

    try:
        return _run_command(args, cnf)
    except RowLimitExceeded as exc:
        print(f"row limit exceeded: {exc}", file=sys.stderr)
        return 4
    except OracleLimitError as exc:
        print(f"oracle limit exceeded: {exc}", file=sys.stderr)
        return 4


def _run_command(args, cnf: Cnf) -> int:
    result = _solution(cnf, args)
    rows = result.final_rows

    if args.command == "solve":
        payload = {"rows": [r.to_json_dict() for r in rows], "models": str(result.model_count)}
        lines = _row_lines(rows) + [f"rows={len(rows)} models={result.model_count}"]
        _emit(payload, lines, args.format)
        return 0

    if args.command == "count":
        payload = {"rows": len(rows), "models": str(result.model_count)}
        _emit(payload, [f"rows={len(rows)} models={result.model_count}"], args.format)
        return 0

    if args.command == "enum":
        if args.format == "json":
            models = [
                "".join(map(str, bits)) for row in rows for bits in row.members()
            ]
            _emit({"models": models, "count": str(result.model_count)}, [], "json")
        else:
            for row in rows:
                for bits in row.members():
                    print("".join(map(str, bits)))
        return 0

    if args.command == "verify":
        report = check_partition(rows, cnf, limit=args.oracle_limit)
        _emit(report.to_json_dict(), report.to_text().splitlines(), args.format)
        return 0 if report.ok else 3

    if args.command == "expand":
        expanded = [plain for row in rows for plain in row.expand_012()]
        payload = {"rows": [r.to_json_dict() for r in expanded], "models": str(result.model_count)}
        _emit(payload, _row_lines(expanded) + [f"rows={len(expanded)}"], args.format)
        return 0

    if args.command == "stats":
        payload = _stats_payload(result, [p for row in rows for p in row.expand_012()])
        _emit(payload, [f"{key}={value}" for key, value in payload.items()], args.format)
        return 0

    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
