"""The ten drawing and deciding primitives.

Constructions may only reach geometry through this module.  Each operation
checks its precondition and raises :class:`PreconditionViolated` with the name
of the violated condition; outputs satisfy the stated postconditions exactly.
The model predicates are re-exported so higher layers can observe objects
without touching coordinates.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .cfield import sqrt
from .errors import PreconditionViolated
from .model import (  # noqa: F401  (re-exported for observation)
    Decision,
    Flag,
    Line,
    Point,
    Ray,
    Side,
    between,
    between_oo,
    coincide_lines,
    coincide_points,
    collinear,
    dist2,
    distinct_points,
    incident,
    lines_cross,
    opposite_ray,
    opposite_side,
    orientation,
    ordered4,
    parallel,
    same_direction,
    same_ray,
    same_side,
    side_of_line,
)

_COORD_RANGE = 9
_DENOMS = (1, 2, 3, 4)


@dataclass
class KernelCtx:
    """Source of the "arbitrary" choices: seed plus a fresh-point counter.

    Identical seeds and identical call sequences give identical points.
    """

    seed: int = 0
    counter: int = 0

    def fork(self) -> "KernelCtx":
        return KernelCtx(self.seed, self.counter)


def _require(cond: bool, name: str) -> None:
    if not cond:
        raise PreconditionViolated(name)


# -- points -----------------------------------------------------------------


def draw_point(ctx: KernelCtx) -> Point:
    """(0, 0) first, then small seeded rational points other than the origin."""
    n = ctx.counter
    ctx.counter += 1
    if n == 0:
        return Point.of(0, 0)
    rng = random.Random(f"{ctx.seed}:{n}")
    while True:
        x = Fraction(rng.randint(-_COORD_RANGE, _COORD_RANGE), rng.choice(_DENOMS))
        y = Fraction(rng.randint(-_COORD_RANGE, _COORD_RANGE), rng.choice(_DENOMS))
        if x or y:
            return Point.of(x, y)


def draw_distinct_point(ctx: KernelCtx | None, A: Point) -> Point:
    return Point(A.x + 1, A.y)


def decide_distinct(A: Point, B: Point, C: Point) -> Decision:
    """First: C differs from A.  Second: C differs from B."""
    _require(distinct_points(A, B), "distinct(A, B)")
    return Decision.First if distinct_points(A, C) else Decision.Second


# -- lines ------------------------------------------------------------------


def point_on_line(ctx: KernelCtx | None, x: Line) -> Point:
    return x.p


def distinct_point_on_line(ctx: KernelCtx | None, x: Line, A: Point) -> Point:
    _require(incident(A, x), "incident(A, x)")
    return x.q if distinct_points(A, x.q) else x.p


def point_off_line(ctx: KernelCtx | None, x: Line) -> Point:
    """p shifted by the left normal of pq."""
    p, q = x.p, x.q
    return Point(p.x - (q.y - p.y), p.y + (q.x - p.x))


def join(A: Point, B: Point) -> Line:
    _require(distinct_points(A, B), "distinct(A, B)")
    return Line(A, B)


def decide_off_line(A: Point, B: Point, x: Line, y: Line) -> Decision:
    """First: A is off y.  Second: B is off y."""
    _require(distinct_points(A, B), "distinct(A, B)")
    _require(incident(A, x) and incident(B, x), "incident(A, B, x)")
    _require(not coincide_lines(x, y), "distinct_lines(x, y)")
    return Decision.First if not incident(A, y) else Decision.Second


def meet(x: Line, y: Line) -> Point:
    _require(lines_cross(x, y), "intersect(x, y)")
    d1 = (x.q.x - x.p.x, x.q.y - x.p.y)
    d2 = (y.q.x - y.p.x, y.q.y - y.p.y)
    w = (y.p.x - x.p.x, y.p.y - x.p.y)
    t = (w[0] * d2[1] - w[1] * d2[0]) / (d1[0] * d2[1] - d1[1] * d2[0])
    return Point(x.p.x + t * d1[0], x.p.y + t * d1[1])


# -- circles ----------------------------------------------------------------


def cut_line_circle(A: Point, O: Point, B: Point) -> Point:
    """Point C on line AO, past O as seen from A, on the circle about O through B."""
    _require(distinct_points(A, O), "distinct(A, O)")
    r2 = dist2(O, B)
    if r2.sign() == 0:
        return O
    k = sqrt(r2 / dist2(O, A))
    return Point(O.x + k * (O.x - A.x), O.y + k * (O.y - A.y))


def decide_pasch(A: Point, B: Point, C: Point, x: Line) -> Decision:
    """First: x separates A and C.  Second: x separates C and B."""
    _require(side_of_line(x, A, B) is Side.Opposite, "opposite_side(x, A, B)")
    _require(not incident(C, x), "not_incident(C, x)")
    return Decision.First if side_of_line(x, A, C) is Side.Opposite else Decision.Second


def _diametral(A: Point, O: Point, B: Point) -> bool:
    return between(A, O, B) and (dist2(O, A) - dist2(O, B)).sign() == 0


def cut_circles(O: Point, A: Point, B: Point, O2: Point, A2: Point, B2: Point, P: Point) -> Point:
    """Meet of circle O (diameter AB) and circle O2 (diameter A2B2) on P's side of O O2."""
    _require(not collinear(O, O2, P), "not_collinear(O, O2, P)")
    _require(_diametral(A, O, B), "diametral(A, O, B)")
    _require(_diametral(A2, O2, B2), "diametral(A2, O2, B2)")
    _require(ordered4(A, A2, B, B2), "ordered4(A, A2, B, B2)")
    dx, dy = O2.x - O.x, O2.y - O.y
    d2 = dx * dx + dy * dy
    r1, r2 = dist2(O, A), dist2(O2, A2)
    a = (d2 + r1 - r2) / (2 * d2)
    h = sqrt(r1 / d2 - a * a)
    if (dx * (P.y - O.y) - dy * (P.x - O.x)).sign() < 0:
        h = -h
    return Point(O.x + a * dx - h * dy, O.y + a * dy + h * dx)


SCRIPT_OPS = {
    "point": draw_point,
    "distinct_point": draw_distinct_point,
    "decide_distinct": decide_distinct,
    "point_on": point_on_line,
    "distinct_point_on": distinct_point_on_line,
    "point_off": point_off_line,
    "join": join,
    "decide_off_line": decide_off_line,
    "meet": meet,
    "cut_line_circle": cut_line_circle,
    "decide_pasch": decide_pasch,
    "cut_circles": cut_circles,
}
