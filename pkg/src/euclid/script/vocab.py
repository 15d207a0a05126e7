"""The closed script vocabulary: operation and predicate signatures."""
from __future__ import annotations

import inspect
from dataclasses import dataclass
from typing import Callable

from .. import congruence, constructions, kernel, quantities

POINT, LINE, DECISION = "point", "line", "decision"


@dataclass(frozen=True)
class OpSig:
    name: str
    fn: Callable
    params: tuple[str, ...]
    result: str
    uses_ctx: bool
    # argument index pairs that must name different objects, with the precondition name
    distinct: tuple[tuple[int, int, str], ...] = ()


_P, _L = POINT, LINE

# name -> (parameter kinds, result kind, identical-argument lint)
_SIGNATURES: dict[str, tuple[tuple[str, ...], str, tuple[tuple[int, int, str], ...]]] = {
    "point": ((), _P, ()),
    "distinct_point": ((_P,), _P, ()),
    "decide_distinct": ((_P, _P, _P), DECISION, ((0, 1, "distinct(A, B)"),)),
    "point_on": ((_L,), _P, ()),
    "distinct_point_on": ((_L, _P), _P, ()),
    "point_off": ((_L,), _P, ()),
    "join": ((_P, _P), _L, ((0, 1, "distinct(A, B)"),)),
    "decide_off_line": ((_P, _P, _L, _L), DECISION, ((0, 1, "distinct(A, B)"), (2, 3, "distinct_lines(x, y)"))),
    "meet": ((_L, _L), _P, ((0, 1, "intersect(x, y)"),)),
    "cut_line_circle": ((_P, _P, _P), _P, ((0, 1, "distinct(A, O)"),)),
    "decide_pasch": ((_P, _P, _P, _L), DECISION, ((0, 1, "opposite_side(x, A, B)"),)),
    "cut_circles": ((_P,) * 7, _P, ((0, 3, "not_collinear(O, O2, P)"), (0, 6, "not_collinear(O, O2, P)"), (3, 6, "not_collinear(O, O2, P)"))),
    "line_through": ((_P,), _L, ()),
    "any_line": ((), _L, ()),
    "line_avoiding": ((_P,), _L, ()),
    "distinct_line_through": ((_P, _L), _L, ()),
    "crossing_line": ((_L,), _L, ()),
    "point_between": ((_P, _P), _P, ((0, 1, "distinct(A, B)"),)),
    "point_beyond": ((_P, _P), _P, ((0, 1, "distinct(A, B)"),)),
    "equilateral": ((_P, _P, _P), _P, ((0, 1, "not_collinear(A, B, P)"), (0, 2, "not_collinear(A, B, P)"), (1, 2, "not_collinear(A, B, P)"))),
    "transfer_segment": ((_P,) * 4, _P, ((0, 1, "distinct(O, A)"),)),
    "transfer_angle": ((_P,) * 6, _P, ((0, 1, "not_collinear(A, O, B)"), (1, 2, "not_collinear(A, O, B)"), (3, 4, "distinct(O2, A2)"))),
    "superpose": ((_P,) * 6, _P, ((0, 1, "not_collinear(A, B, C)"), (3, 4, "not_collinear(D, E, F)"))),
    "parallel_through": ((_P, _L), _L, ()),
    "decide_lines_cross": ((_L, _L, _L), DECISION, ((0, 1, "intersect(x, y)"),)),
    "decide_lines_distinct": ((_L, _L, _L), DECISION, ((0, 1, "distinct_lines(x, y)"),)),
}


def exported_ops() -> dict[str, Callable]:
    """Union of the SCRIPT_OPS tables of the geometry modules."""
    out: dict[str, Callable] = {}
    for mod in (kernel, constructions, quantities, congruence):
        for name, fn in mod.SCRIPT_OPS.items():
            if name in out:
                raise RuntimeError(f"mnemonic {name} exported twice")
            out[name] = fn
    return out


def _build() -> dict[str, OpSig]:
    fns = exported_ops()
    ops = {}
    for name, (params, result, distinct) in _SIGNATURES.items():
        fn = fns[name]
        uses_ctx = next(iter(inspect.signature(fn).parameters), None) == "ctx"
        ops[name] = OpSig(name, fn, params, result, uses_ctx, distinct)
    return ops


OPS: dict[str, OpSig] = _build()

# predicate -> accepted parameter kind tuples
PREDICATES: dict[str, tuple[tuple[str, ...], ...]] = {
    "eq": ((_P, _P), (_L, _L)),
    "neq": ((_P, _P), (_L, _L)),
    "incident": ((_P, _L),),
    "not_incident": ((_P, _L),),
    "collinear": ((_P, _P, _P),),
    "between": ((_P, _P, _P),),
    "same_side": ((_L, _P, _P),),
    "opposite_side": ((_L, _P, _P),),
    "same_ray": ((_P, _P, _P),),
    "parallel": ((_L, _L),),
    "len_eq": ((_P,) * 4,),
    "len_less": ((_P,) * 4,),
    "angle_eq": ((_P,) * 6,),
    "angle_less": ((_P,) * 6,),
    "congruent": ((_P,) * 6,),
}


def predicate_arity(name: str) -> int:
    return len(PREDICATES[name][0])
