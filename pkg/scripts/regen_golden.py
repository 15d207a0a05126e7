"""Rewrite the golden traces and SVGs of the script corpus.

Run after an intentional change to trace or diagram output, then review the diff.
"""
from __future__ import annotations

import argparse
from pathlib import Path

from euclid.render import render_svg
from euclid.script import execute, parse

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "corpus" / "golden"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dir", type=Path, default=GOLDEN)
    args = ap.parse_args()
    for src in sorted(args.dir.glob("*.euc")):
        trace = execute(parse(src.read_text(encoding="utf-8")), seed=0)
        src.with_suffix(".trace.json").write_text(trace.dumps(), encoding="utf-8")
        src.with_suffix(".svg").write_text(render_svg(trace), encoding="utf-8")
        print(f"wrote {src.stem}: {len(trace.steps)} steps")


if __name__ == "__main__":
    main()
