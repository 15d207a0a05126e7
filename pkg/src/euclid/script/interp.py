"""Interpreter: runs a parsed script against the kernel and records a trace."""
from __future__ import annotations

import contextlib
import json
from dataclasses import dataclass, field
from typing import Any

from ..cfield import CReal, depth_limit
from ..congruence import Triangle, congruent
from ..errors import AssertionFailed, DepthLimitExceeded, EuclidError, PreconditionViolated
from ..kernel import Decision, KernelCtx, Line, Point
from ..model import (
    between,
    coincide_lines,
    coincide_points,
    collinear,
    dist2,
    incident,
    opposite_side,
    parallel,
    same_ray,
    same_side,
)
from ..quantities import angle_decide, nonoriented_measure
from ..model import Order
from .syntax import Assert, Branch, Let, Program, executable
from .vocab import OPS

TRACE_VERSION = 1
DEFAULT_DIGITS = 6


@dataclass
class Step:
    i: int
    name: str
    op: str
    args: list[str]
    kind: str
    exact: list[str]
    approx: list[str]
    value: Any = field(default=None, repr=False, compare=False)
    arg_values: tuple = field(default=(), repr=False, compare=False)

    def to_json(self) -> dict:
        return {"i": self.i, "name": self.name, "op": self.op, "args": self.args, "kind": self.kind,
                "exact": self.exact, "approx": self.approx}


@dataclass
class AssertRecord:
    i: int
    pred: str
    ok: bool

    def to_json(self) -> dict:
        return {"i": self.i, "pred": self.pred, "ok": self.ok}


@dataclass
class Trace:
    seed: int
    steps: list[Step] = field(default_factory=list)
    asserts: list[AssertRecord] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"version": TRACE_VERSION, "seed": self.seed,
                "steps": [s.to_json() for s in self.steps],
                "asserts": [a.to_json() for a in self.asserts]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"


def line_coefficients(x: Line) -> tuple[CReal, CReal, CReal]:
    """(a, b, c) with a*x + b*y + c = 0, scaled so the first nonzero of a, b is 1."""
    a, b, c = x.coefficients()
    lead = a if a.sign() else b
    return a / lead, b / lead, c / lead


def describe(value, digits: int) -> tuple[str, list[str], list[str]]:
    """(kind, exact strings, decimal strings) for a step result."""
    if isinstance(value, Point):
        coords = (value.x, value.y)
        return "point", [c.expr() for c in coords], [c.to_decimal(digits) for c in coords]
    if isinstance(value, Line):
        coeffs = line_coefficients(value)
        return "line", [c.expr() for c in coeffs], [c.to_decimal(digits) for c in coeffs]
    if isinstance(value, Decision):
        return "decision", [value.value], []
    raise TypeError(f"unexpected step result {value!r}")


def _show(name: str, value, digits: int) -> str:
    _, exact, _ = describe(value, digits)
    return f"{name}=({', '.join(exact)})"


def _angle_order(v) -> Order:
    return angle_decide(nonoriented_measure(*v[:3]), nonoriented_measure(*v[3:]))


def _same(a, b) -> bool:
    return coincide_points(a, b) if isinstance(a, Point) else coincide_lines(a, b)


_PREDICATES = {
    "eq": lambda v: _same(*v),
    "neq": lambda v: not _same(*v),
    "incident": lambda v: incident(*v),
    "not_incident": lambda v: not incident(*v),
    "collinear": lambda v: collinear(*v),
    "between": lambda v: between(*v),
    "same_side": lambda v: same_side(*v),
    "opposite_side": lambda v: opposite_side(*v),
    "same_ray": lambda v: same_ray(*v),
    "parallel": lambda v: parallel(*v),
    "len_eq": lambda v: (dist2(v[0], v[1]) - dist2(v[2], v[3])).sign() == 0,
    "len_less": lambda v: (dist2(v[0], v[1]) - dist2(v[2], v[3])).sign() < 0,
    "angle_eq": lambda v: _angle_order(v) is Order.Equal,
    "angle_less": lambda v: _angle_order(v) is Order.Less,
    "congruent": lambda v: congruent(Triangle(*v[:3]), Triangle(*v[3:])),
}


def _tag(err: EuclidError, i: int, trace: Trace) -> EuclidError:
    if isinstance(err, (PreconditionViolated, DepthLimitExceeded)) and err.step is None:
        err.step = i
        err.args = (f"step {i}: {err}",)
    err.trace = trace  # type: ignore[attr-defined]
    return err


def execute(p: Program, seed: int = 0, digits: int = DEFAULT_DIGITS, max_depth: int | None = None) -> Trace:
    """Run the program; identical (program, seed) pairs give identical traces.

    Errors carry the step index and the partial trace as ``err.trace``.
    """
    limit = depth_limit(max_depth) if max_depth is not None else contextlib.nullcontext()
    with limit:
        return _run(p, seed, digits)


def _run(p: Program, seed: int, digits: int) -> Trace:
    ctx = KernelCtx(seed)
    trace = Trace(seed)
    env: dict[str, Any] = {}
    local: list[str] = []
    current: Branch | None = None
    for i, (s, branch) in enumerate(executable(p.stmts)):
        if branch is not current:
            for name in local:
                env.pop(name, None)
            local, current = [], branch
        if branch is not None and env[branch.decision].value != branch.arm:
            continue
        try:
            if isinstance(s, Let):
                _let(s, i, ctx, env, trace, digits)
                if branch is not None:
                    local.append(s.name)
            else:
                _assert(s, i, env, trace, digits)
        except EuclidError as err:
            raise _tag(err, i, trace) from None
    return trace


def _let(s: Let, i: int, ctx: KernelCtx, env: dict, trace: Trace, digits: int) -> None:
    if s.literal is not None:
        value = Point.of(*s.literal)
        args = [str(q) for q in s.literal]
        arg_values: tuple = ()
    else:
        sig = OPS[s.op]
        arg_values = tuple(env[a] for a in s.args)
        value = sig.fn(ctx, *arg_values) if sig.uses_ctx else sig.fn(*arg_values)
        args = list(s.args)
    kind, exact, approx = describe(value, digits)
    env[s.name] = value
    trace.steps.append(Step(i, s.name, s.op, args, kind, exact, approx, value, arg_values))


def _assert(s: Assert, i: int, env: dict, trace: Trace, digits: int) -> None:
    values = [env[a] for a in s.args]
    ok = bool(_PREDICATES[s.pred](values))
    trace.asserts.append(AssertRecord(i, s.pred, ok))
    if not ok:
        operands = ", ".join(_show(a, v, digits) for a, v in zip(s.args, values))
        raise AssertionFailed(i, s.pred, operands)
