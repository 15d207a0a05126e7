"""Construction scripts: parsing, formatting, execution and traces."""
from .interp import AssertRecord, Step, Trace, execute
from .syntax import Assert, Blank, Branch, Comment, KindMismatch, Let, Program, format_program, lint, parse
from .vocab import OPS, PREDICATES

__all__ = [
    "AssertRecord", "Step", "Trace", "execute", "Assert", "Blank", "Branch", "Comment", "KindMismatch",
    "Let", "Program", "format_program", "lint", "parse", "OPS", "PREDICATES",
]
