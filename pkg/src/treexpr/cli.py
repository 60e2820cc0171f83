"""Command-line front end.

    treexpr convert --from {root,numexpr} --to {root,numexpr,python}
                    [--expr STR | --input FILE] [--output FILE] [--batch]
    treexpr bench [--base EXPR] [--repeats 1,2,4,...] [--trials N] [--csv PATH]

Exit status: 0 success, 1 parse error, 2 emit error, 3 usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import sys

from . import __version__
from .bench import DEFAULT_BASE, DEFAULT_REPEATS, loglog_slope, run_bench, write_csv
from .emit import emit
from .errors import EmitError, ParseError
from .grammar import parse

EXIT_OK, EXIT_PARSE, EXIT_EMIT, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _repeats(text: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}")
    if not values or min(values) < 1:
        raise argparse.ArgumentTypeError("repeat counts must be positive integers")
    return values


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        value = 0
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="treexpr", description="Translate ROOT TTreeFormula and numexpr expressions.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    conv = sub.add_parser("convert", help="convert an expression between dialects")
    conv.add_argument("--from", dest="source", required=True, choices=["root", "numexpr"])
    conv.add_argument("--to", dest="target", required=True, choices=["root", "numexpr", "python"])
    src = conv.add_mutually_exclusive_group()
    src.add_argument("--expr", help="expression text")
    src.add_argument("--input", metavar="FILE", help="read the expression from FILE (default: stdin)")
    conv.add_argument("--output", metavar="FILE", help="write the result to FILE (default: stdout)")
    conv.add_argument("--batch", action="store_true",
                      help="one expression per input line; stop at the first error")

    bench = sub.add_parser("bench", help="time parsing of a repeated expression")
    bench.add_argument("--base", default=DEFAULT_BASE)
    bench.add_argument("--repeats", type=_repeats, default=list(DEFAULT_REPEATS),
                       help="comma-separated repeat counts (default: 1,2,4,...,256)")
    bench.add_argument("--trials", type=_positive, default=5)
    bench.add_argument("--csv", metavar="PATH", help="write records as CSV (default: stdout)")
    return parser


def _read_source(args, stdin) -> str:
    if args.expr is not None:
        return args.expr
    if args.input is not None:
        try:
            with open(args.input, encoding="utf-8") as f:
                return f.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    return stdin.read()


def _convert(args, stdin, stdout, stderr) -> int:
    text = _read_source(args, stdin)
    if args.batch:
        lines = text.splitlines()
    else:
        lines = [text]
    out = []
    status = EXIT_OK
    for lineno, line in enumerate(lines, 1):
        if args.batch and not line.strip():
            out.append("")
            continue
        try:
            out.append(emit(parse(line, args.source), args.target))
        except ParseError as exc:
            pos = exc.position
            if args.batch:
                where = f"line {lineno}, column {pos.column}"
            else:
                where = f"line {pos.line}, column {pos.column}"
            stderr.write(f"treexpr: parse error at {where}: {exc.detail}\n")
            status = EXIT_PARSE
            break
        except EmitError as exc:
            stderr.write(f"treexpr: emit error: {exc}\n")
            status = EXIT_EMIT
            break
    result = "".join(line + "\n" for line in out)
    if args.output is not None:
        try:
            with open(args.output, "w", encoding="utf-8") as f:
                f.write(result)
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc.strerror}") from None
    else:
        stdout.write(result)
    return status


def _bench(args, stdout, stderr) -> int:
    try:
        records = run_bench(args.base, args.repeats, args.trials)
    except ParseError as exc:
        stderr.write(f"treexpr: base expression does not parse: {exc.message}\n")
        return EXIT_PARSE
    if args.csv is not None:
        try:
            with open(args.csv, "w", encoding="utf-8", newline="") as f:
                write_csv(records, f)
        except OSError as exc:
            raise UsageError(f"cannot write {args.csv}: {exc.strerror}") from None
    else:
        write_csv(records, stdout)
    if len(records) >= 2:
        stderr.write(f"log-log slope: {loglog_slope(records):.3f}\n")
    return EXIT_OK


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        # argparse prints help/usage to the process streams
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command == "convert":
            return _convert(args, stdin, stdout, stderr)
        return _bench(args, stdout, stderr)
    except UsageError as exc:
        stderr.write(f"treexpr: {exc}\n")
        return EXIT_USAGE
