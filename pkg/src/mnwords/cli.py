"""Command-line front end.

Exit codes: 0 success, 1 data or verification failure, 2 usage error or
size guard exceeded.  Enumerating commands refuse ``m + n`` above the guard
(default 24, env ``MN_SIZE_GUARD``) unless ``--force`` is given.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import textio
from ._backend import BACKEND
from .bijection import xi, xi_inverse
from .counting import closed_form_count, gf_coefficient
from .errors import MNError
from .tilings import enumerate_tilings
from .verify import verify_grid
from .words import enumerate_words

DEFAULT_GUARD = 24

EXIT_OK = 0
EXIT_DATA = 1
EXIT_USAGE = 2


class SizeGuardError(Exception):
    pass


def _guard_limit(args) -> int:
    if args.size_guard is not None:
        return args.size_guard
    env = os.environ.get("MN_SIZE_GUARD")
    if env:
        try:
            return int(env)
        except ValueError:
            raise SizeGuardError(f"MN_SIZE_GUARD must be an integer, got {env!r}")
    return DEFAULT_GUARD


def _check_guard(args, size: int) -> None:
    if args.force:
        return
    limit = _guard_limit(args)
    if size > limit:
        raise SizeGuardError(
            f"m+n = {size} exceeds the size guard {limit}; pass --force to enumerate anyway"
        )


def _nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def cmd_count(args, out) -> int:
    methods = ["enum", "formula", "gf"] if args.method == "all" else [args.method]
    if "enum" in methods:
        _check_guard(args, args.m + args.n)
    counts = {}
    for method in methods:
        if method == "enum":
            counts[method] = sum(1 for _ in enumerate_words(args.m, args.n))
        elif method == "formula":
            counts[method] = closed_form_count(args.m, args.n)
        else:
            counts[method] = gf_coefficient(args.m, args.n)
    if len(methods) == 1:
        print(counts[methods[0]], file=out)
        return EXIT_OK
    for method in methods:
        print(f"{method}\t{counts[method]}", file=out)
    if len(set(counts.values())) != 1:
        print("error: counting methods disagree", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    _check_guard(args, args.m + args.n)
    if args.kind == "words":
        stream, fmt = enumerate_words(args.m, args.n), textio.format_word
    else:
        stream, fmt = enumerate_tilings(args.m, args.n), textio.format_tiling
    if args.format == "jsonl":
        fmt = textio.dumps_record
    write = out.write
    for obj in stream:
        write(fmt(obj) + "\n")
    return EXIT_OK


def _read_lines(path):
    if path is None or path == "-":
        return sys.stdin.read().splitlines()
    return Path(path).read_text(encoding="utf-8").splitlines()


def cmd_map(args, out) -> int:
    status = EXIT_OK
    for lineno, line in enumerate(_read_lines(args.input), 1):
        try:
            if args.direction == "word2tiling":
                result = textio.format_tiling(xi(textio.parse_word(line, args.m)))
            else:
                result = textio.format_word(xi_inverse(textio.parse_tiling(line, args.m)))
        except MNError as exc:
            print(f"line {lineno}: {exc}", file=sys.stderr)
            status = EXIT_DATA
            continue
        print(result, file=out)
    return status


def cmd_verify(args, out) -> int:
    _check_guard(args, args.max_m + args.max_n)
    report = verify_grid(args.max_m, args.max_n, jobs=args.jobs)
    print("m\tn\twords\ttilings\tformula\tgf\troundtrip", file=out)
    for row in report.grid:
        print(
            f"{row.m}\t{row.n}\t{row.enum_word_count}\t{row.enum_tiling_count}\t"
            f"{row.closed_form}\t{row.gf_coeff}\t{'ok' if row.roundtrip_ok else 'FAIL'}",
            file=out,
        )
    if report.overall:
        print("overall: ok", file=out)
        return EXIT_OK
    print("overall: FAIL", file=out)
    bad = report.first_failure()
    detail = bad.counterexample or "counts disagree"
    print(f"first failure at (m={bad.m}, n={bad.n}): {detail}", file=sys.stderr)
    return EXIT_DATA


def cmd_render(args, out) -> int:
    lines = [line for line in _read_lines(args.input) if line.strip()]
    if len(lines) > 1:
        print("error: expected a single tiling", file=sys.stderr)
        return EXIT_DATA
    try:
        tiling = textio.parse_tiling(lines[0] if lines else "", args.m)
    except MNError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    svg = textio.render_svg(tiling, args.unit)
    if args.output is None or args.output == "-":
        out.write(svg)
    else:
        # Binary write keeps newlines identical across platforms.
        Path(args.output).write_bytes(svg.encode("utf-8"))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mnwords",
        description="(m,n)-words, two-toned tilings, and the bijection between them.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    guard = argparse.ArgumentParser(add_help=False)
    guard.add_argument("--force", action="store_true", help="ignore the size guard")
    guard.add_argument(
        "--size-guard", type=_nonneg, default=None, metavar="N",
        help=f"largest m+n to enumerate (default: $MN_SIZE_GUARD or {DEFAULT_GUARD})",
    )

    p = sub.add_parser("count", parents=[guard], help="count W(m,n) = T(m,n)")
    p.add_argument("m", type=_nonneg)
    p.add_argument("n", type=_nonneg)
    p.add_argument("--method", choices=["enum", "formula", "gf", "all"], default="formula")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", parents=[guard], help="list every word or tiling")
    p.add_argument("m", type=_nonneg)
    p.add_argument("n", type=_nonneg)
    p.add_argument("--kind", choices=["words", "tilings"], default="words")
    p.add_argument("--format", choices=["text", "jsonl"], default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("map", help="apply the bijection line by line")
    p.add_argument("--direction", choices=["word2tiling", "tiling2word"], required=True)
    p.add_argument("--in", dest="input", default=None, help="input file (default stdin)")
    p.add_argument("--m", type=_nonneg, default=None, help="m for compact words or tilings")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("verify", parents=[guard], help="exhaustive check over a grid")
    p.add_argument("--max-m", type=_nonneg, default=5)
    p.add_argument("--max-n", type=_nonneg, default=7)
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a tiling as SVG")
    p.add_argument("--in", dest="input", default=None, help="tiling file (default stdin)")
    p.add_argument("--out", dest="output", default=None, help="SVG file (default stdout)")
    p.add_argument("--unit", type=_positive, default=20, help="pixels per cell")
    p.add_argument("--m", type=_nonneg, default=None)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
