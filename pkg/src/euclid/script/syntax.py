"""Lexer, recursive-descent parser and canonical printer for construction scripts.

A script is line oriented::

    # equilateral triangle on AB
    let A = (0, 0)
    let B = (1, 0)
    let P = (0, 1)
    let C = equilateral(A, B, P)
    assert len_eq(A, B, B, C)
    let d = decide_distinct(A, B, C)
    branch d First:
        assert neq(A, C)

Branch bodies are indented, straight-line and cannot nest.  Names bound inside a
body are local to it.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from ..errors import ArityMismatch, DuplicateDefinition, ParseError, UnknownIdentifier
from .vocab import DECISION, OPS, POINT, PREDICATES

KEYWORDS = frozenset({"let", "assert", "branch"})
ARMS = ("First", "Second")
INDENT = "    "


class KindMismatch(ParseError):
    """An argument names an object of the wrong kind (e.g. a line where a point is needed)."""


# -- syntax tree --------------------------------------------------------------
# Positions are carried for error reporting but do not take part in equality.


@dataclass(frozen=True)
class Let:
    name: str
    op: str
    args: tuple[str, ...] = ()
    literal: tuple[Fraction, Fraction] | None = None
    comment: str | None = None
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)
    arg_cols: tuple[int, ...] = field(default=(), compare=False)


@dataclass(frozen=True)
class Assert:
    pred: str
    args: tuple[str, ...]
    comment: str | None = None
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)
    arg_cols: tuple[int, ...] = field(default=(), compare=False)


@dataclass(frozen=True)
class Comment:
    text: str
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Blank:
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Branch:
    decision: str
    arm: str
    body: tuple[Union[Let, Assert, Comment], ...]
    comment: str | None = None
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


Stmt = Union[Let, Assert, Comment, Blank, Branch]


@dataclass(frozen=True)
class Program:
    stmts: tuple[Stmt, ...]

    def kinds(self) -> dict[str, str]:
        """Kind of every top-level binding."""
        return {s.name: result_kind(s) for s in self.stmts if isinstance(s, Let)}


def result_kind(s: Let) -> str:
    return POINT if s.literal is not None else OPS[s.op].result


def executable(stmts) -> list:
    """Lets and asserts in program order, with branch bodies inlined, as (stmt, branch) pairs."""
    out = []
    for s in stmts:
        if isinstance(s, Branch):
            out.extend((b, s) for b in s.body if isinstance(b, (Let, Assert)))
        elif isinstance(s, (Let, Assert)):
            out.append((s, None))
    return out


# -- lexer ----------------------------------------------------------------------

_TOKEN = re.compile(
    r"(?P<ws>[ \t]+)|(?P<comment>#.*)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)"
    r"|(?P<rational>-?[0-9]+(?:/[0-9]+)?)|(?P<punct>[(),=:])"
)


@dataclass(frozen=True)
class Token:
    kind: str  # ident, rational, punct, comment, end
    text: str
    col: int


def _lex(text: str, lineno: int) -> list[Token]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(lineno, pos + 1, f"unexpected character {text[pos]!r}")
        if m.lastgroup != "ws":
            toks.append(Token(m.lastgroup, m.group(), pos + 1))
        pos = m.end()
    toks.append(Token("end", "", len(text) + 1))
    return toks


# -- parser -----------------------------------------------------------------------


class _Line:
    """Cursor over the tokens of one line."""

    def __init__(self, toks: list[Token], lineno: int):
        self.toks = toks
        self.pos = 0
        self.lineno = lineno

    def peek(self) -> Token:
        return self.toks[self.pos]

    def error(self, message: str, expected=(), tok: Token | None = None) -> ParseError:
        tok = tok or self.peek()
        found = "end of line" if tok.kind in ("end", "comment") else repr(tok.text)
        return ParseError(self.lineno, tok.col, f"{message}, found {found}", frozenset(expected))

    def ident(self, what: str = "identifier") -> Token:
        tok = self.peek()
        if tok.kind != "ident":
            raise self.error(f"expected {what}", {"IDENT"})
        self.pos += 1
        return tok

    def punct(self, ch: str) -> Token:
        tok = self.peek()
        if tok.kind != "punct" or tok.text != ch:
            raise self.error(f"expected {ch!r}", {ch})
        self.pos += 1
        return tok

    def rational(self) -> Fraction:
        tok = self.peek()
        if tok.kind != "rational":
            raise self.error("expected rational number", {"RATIONAL"})
        self.pos += 1
        num, _, den = tok.text.partition("/")
        if den and int(den) == 0:
            raise ParseError(self.lineno, tok.col + len(num) + 1, "zero denominator", frozenset({"positive-integer"}))
        return Fraction(int(num), int(den) if den else 1)

    def finish(self) -> str | None:
        """Consume an optional trailing comment and require end of line."""
        tok = self.peek()
        comment = None
        if tok.kind == "comment":
            comment = tok.text[1:].strip()
            self.pos += 1
            tok = self.peek()
        if tok.kind != "end":
            raise self.error("expected end of line", {"NEWLINE"})
        return comment


def _args(cur: _Line) -> tuple[list[Token], Token]:
    """Identifiers up to and including ')'; returns (identifiers, closing token)."""
    open_tok = cur.punct("(")
    names: list[Token] = []
    tok = cur.peek()
    if tok.kind == "punct" and tok.text == ")":
        cur.pos += 1
        return names, open_tok
    while True:
        names.append(cur.ident())
        tok = cur.peek()
        if tok.kind == "punct" and tok.text == ",":
            cur.pos += 1
            continue
        if tok.kind == "punct" and tok.text == ")":
            cur.pos += 1
            return names, open_tok
        raise cur.error("expected ',' or ')'", {",", ")"})


class _Scope:
    def __init__(self) -> None:
        self.outer: dict[str, str] = {}
        self.inner: dict[str, str] | None = None

    def lookup(self, name: str) -> str | None:
        if self.inner is not None and name in self.inner:
            return self.inner[name]
        return self.outer.get(name)

    def bind(self, name: str, kind: str) -> None:
        (self.inner if self.inner is not None else self.outer)[name] = kind


def _check_args(lineno: int, where: str, toks: list[Token], options, scope: _Scope, head: Token):
    if all(len(opt) != len(toks) for opt in options):
        want = len(options[0])
        raise ArityMismatch(lineno, head.col, f"{where} takes {want} argument{'s' * (want != 1)}, got {len(toks)}")
    kinds = []
    for t in toks:
        kind = scope.lookup(t.text)
        if kind is None:
            raise UnknownIdentifier(lineno, t.col, f"unknown identifier {t.text!r}")
        kinds.append(kind)
    if tuple(kinds) not in options:
        expect = options[0]
        for t, got, want in zip(toks, kinds, expect):
            if got != want:
                raise KindMismatch(lineno, t.col, f"{where} expects a {want} here, {t.text!r} is a {got}", frozenset({want}))
        raise KindMismatch(lineno, toks[0].col, f"{where} argument kinds do not match")


def _parse_let(cur: _Line, scope: _Scope) -> Let:
    cur.pos += 1
    name = cur.ident("name to bind")
    if name.text in KEYWORDS:
        raise ParseError(cur.lineno, name.col, f"{name.text!r} is a keyword", frozenset({"IDENT"}))
    cur.punct("=")
    tok = cur.peek()
    if tok.kind == "punct" and tok.text == "(":
        cur.pos += 1
        x = cur.rational()
        cur.punct(",")
        y = cur.rational()
        cur.punct(")")
        stmt = Let(name.text, "point", (), (x, y), cur.finish(), cur.lineno, name.col)
    else:
        if tok.kind != "ident":
            raise cur.error("expected operation or literal point", {"IDENT", "("})
        op = cur.ident()
        if op.text not in OPS:
            raise UnknownIdentifier(cur.lineno, op.col, f"unknown operation {op.text!r}", frozenset(OPS))
        args, _ = _args(cur)
        comment = cur.finish()
        _check_args(cur.lineno, op.text, args, (OPS[op.text].params,), scope, op)
        stmt = Let(name.text, op.text, tuple(a.text for a in args), None, comment, cur.lineno, name.col,
                   tuple(a.col for a in args))
    if scope.lookup(name.text) is not None:
        raise DuplicateDefinition(cur.lineno, name.col, f"{name.text!r} is already defined")
    scope.bind(name.text, result_kind(stmt))
    return stmt


def _parse_assert(cur: _Line, scope: _Scope) -> Assert:
    head = cur.peek()
    cur.pos += 1
    pred = cur.ident("predicate")
    if pred.text not in PREDICATES:
        raise UnknownIdentifier(cur.lineno, pred.col, f"unknown predicate {pred.text!r}", frozenset(PREDICATES))
    args, open_tok = _args(cur)
    if not args:
        raise cur.error("expected identifier", {"IDENT"}, tok=cur.toks[cur.pos - 1])
    comment = cur.finish()
    _check_args(cur.lineno, pred.text, args, PREDICATES[pred.text], scope, pred)
    return Assert(pred.text, tuple(a.text for a in args), comment, cur.lineno, head.col, tuple(a.col for a in args))


def _parse_branch_head(cur: _Line, scope: _Scope) -> Branch:
    head = cur.peek()
    cur.pos += 1
    d = cur.ident("decision name")
    kind = scope.lookup(d.text)
    if kind is None:
        raise UnknownIdentifier(cur.lineno, d.col, f"unknown identifier {d.text!r}")
    if kind != DECISION:
        raise KindMismatch(cur.lineno, d.col, f"branch needs a decision, {d.text!r} is a {kind}", frozenset({DECISION}))
    arm = cur.peek()
    if arm.kind != "ident" or arm.text not in ARMS:
        raise cur.error("expected First or Second", set(ARMS))
    cur.pos += 1
    cur.punct(":")
    return Branch(d.text, arm.text, (), cur.finish(), cur.lineno, head.col)


def parse(source: str) -> Program:
    """Parse a script; raises a ParseError subclass with 1-based line and column."""
    scope = _Scope()
    stmts: list[Stmt] = []
    branch: Branch | None = None
    body: list = []
    pending_blank: Blank | None = None

    def close_branch() -> None:
        nonlocal branch, body
        if branch is not None:
            if not body:
                raise ParseError(branch.line, branch.col, "empty branch body", frozenset({"INDENT"}))
            stmts.append(Branch(branch.decision, branch.arm, tuple(body), branch.comment, branch.line, branch.col))
            branch, body = None, []
            scope.inner = None

    for lineno, raw in enumerate(source.splitlines(), start=1):
        toks = _lex(raw, lineno)
        first = toks[0]
        if first.kind == "end":
            if branch is None:
                if stmts and not isinstance(stmts[-1], Blank):
                    stmts.append(Blank(lineno))
            elif pending_blank is None:
                pending_blank = Blank(lineno)
            continue
        indented = first.col > 1
        if branch is not None and not indented:
            close_branch()
            if pending_blank is not None:
                stmts.append(pending_blank)
        pending_blank = None
        if indented and branch is None:
            raise ParseError(lineno, first.col, "unexpected indentation", frozenset({"let", "assert", "branch", "#"}))
        cur = _Line(toks, lineno)
        if first.kind == "comment":
            stmt: Stmt = Comment(first.text[1:].strip(), lineno)
        elif first.kind == "ident" and first.text == "let":
            stmt = _parse_let(cur, scope)
        elif first.kind == "ident" and first.text == "assert":
            stmt = _parse_assert(cur, scope)
        elif first.kind == "ident" and first.text == "branch":
            if branch is not None:
                raise ParseError(lineno, first.col, "branches cannot nest", frozenset({"let", "assert"}))
            branch = _parse_branch_head(cur, scope)
            scope.inner = {}
            continue
        else:
            raise cur.error("expected statement", {"let", "assert", "branch", "#"})
        (body if branch is not None else stmts).append(stmt)
    close_branch()
    while stmts and isinstance(stmts[-1], Blank):
        stmts.pop()
    return Program(tuple(stmts))


# -- printer ------------------------------------------------------------------------


def _with_comment(text: str, comment: str | None) -> str:
    if comment is None:
        return text
    return f"{text}  # {comment}" if comment else f"{text}  #"


def _comment_line(text: str) -> str:
    return f"# {text}" if text else "#"


def _frac(q: Fraction) -> str:
    return str(q)


def format_stmt(s: Stmt) -> str:
    if isinstance(s, Let):
        if s.literal is not None:
            rhs = f"({_frac(s.literal[0])}, {_frac(s.literal[1])})"
        else:
            rhs = f"{s.op}({', '.join(s.args)})"
        return _with_comment(f"let {s.name} = {rhs}", s.comment)
    if isinstance(s, Assert):
        return _with_comment(f"assert {s.pred}({', '.join(s.args)})", s.comment)
    if isinstance(s, Comment):
        return _comment_line(s.text)
    if isinstance(s, Blank):
        return ""
    head = _with_comment(f"branch {s.decision} {s.arm}:", s.comment)
    return "\n".join([head] + [INDENT + format_stmt(b) for b in s.body])


def format_program(p: Program) -> str:
    """Canonical text; parse(format_program(p)) == p."""
    return "".join(format_stmt(s) + "\n" for s in p.stmts)


# -- static lint ------------------------------------------------------------------


@dataclass(frozen=True)
class Lint:
    line: int
    col: int
    message: str

    def __str__(self) -> str:
        return f"{self.line}:{self.col}: {self.message}"


def lint(p: Program) -> list[Lint]:
    """Preconditions refuted by the text alone: the same object passed where distinct ones are required."""
    literals: dict[str, tuple[Fraction, Fraction]] = {}
    out: list[Lint] = []
    for s, _ in executable(p.stmts):
        if not isinstance(s, Let):
            continue
        if s.literal is not None:
            literals[s.name] = s.literal
            continue
        for i, j, name in OPS[s.op].distinct:
            a, b = s.args[i], s.args[j]
            same = a == b or (a in literals and literals.get(b) == literals[a])
            if same:
                out.append(Lint(s.line, s.arg_cols[j], f"{s.op}: precondition {name} cannot hold ({a} and {b} coincide)"))
    return out
