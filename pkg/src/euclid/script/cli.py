"""Command line: ``euclid run|check|fmt FILE``.

Exit codes: 0 success, 1 assertion or precondition failure, 2 parse or I/O error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ..errors import EuclidError, ParseError
from .interp import DEFAULT_DIGITS, execute
from .syntax import format_program, lint, parse

OK, FAILED, BAD_INPUT = 0, 1, 2


def _load(path: str):
    text = Path(path).read_text(encoding="utf-8")
    return parse(text)


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def _run(args) -> int:
    program = _load(args.file)
    try:
        trace = execute(program, seed=args.seed, digits=args.digits, max_depth=args.max_depth)
    except EuclidError as err:
        partial = getattr(err, "trace", None)
        if args.trace and partial is not None:
            _write(args.trace, partial.dumps())
        print(f"{args.file}: {err}", file=sys.stderr)
        return FAILED
    if args.trace:
        _write(args.trace, trace.dumps())
    if args.svg:
        from ..render import render_svg

        _write(args.svg, render_svg(trace, args.digits))
    for s in trace.steps:
        print(f"{s.i:3d} {s.name} = {s.op}({', '.join(s.args)}) -> ({', '.join(s.exact)})")
    print(f"ok: {len(trace.steps)} steps, {len(trace.asserts)} asserts")
    return OK


def _check(args) -> int:
    problems = lint(_load(args.file))
    for p in problems:
        print(f"{args.file}:{p}", file=sys.stderr)
    if problems:
        return FAILED
    print("ok")
    return OK


def _fmt(args) -> int:
    sys.stdout.write(format_program(_load(args.file)))
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="euclid", description="Run exact ruler-and-compass construction scripts.")
    sub = ap.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="execute a script")
    run.add_argument("file")
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--trace", metavar="OUT.json")
    run.add_argument("--svg", metavar="OUT.svg")
    run.add_argument("--digits", type=int, default=DEFAULT_DIGITS)
    run.add_argument("--max-depth", type=int, default=None)
    run.set_defaults(handler=_run)
    check = sub.add_parser("check", help="parse and lint a script")
    check.add_argument("file")
    check.set_defaults(handler=_check)
    fmt = sub.add_parser("fmt", help="print a script in canonical form")
    fmt.add_argument("file")
    fmt.set_defaults(handler=_fmt)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as err:
        print(f"{args.file}:{err}", file=sys.stderr)
        return BAD_INPUT
    except OSError as err:
        print(f"euclid: {err}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
