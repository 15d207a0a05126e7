"""Segment lengths and angle measures.

Lengths are nonnegative exact reals.  Angle measures are exact unit rotations
``(c, s)``; composition is angle addition modulo the full angle, so no
trigonometric function is ever evaluated.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .cfield import CReal, as_creal, sqrt
from .errors import PreconditionViolated
from .model import Decision, Flag, Order, Orientation, Point, Ray, collinear, dist2, orientation


@dataclass(frozen=True, eq=False)
class Length:
    value: CReal

    def __post_init__(self) -> None:
        if self.value.sign() < 0:
            raise PreconditionViolated("nonnegative(length)")

    @classmethod
    def of(cls, v) -> "Length":
        return cls(as_creal(v))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Length):
            return NotImplemented
        return length_decide(self, other) is Order.Equal

    __hash__ = None

    def __repr__(self) -> str:
        return f"Length({self.value.expr()})"


class AngleClass(enum.Enum):
    Null = 0
    Convex = 1
    Straight = 2
    Reflex = 3


@dataclass(frozen=True, eq=False)
class Rotation:
    c: CReal
    s: CReal

    def __post_init__(self) -> None:
        if (self.c * self.c + self.s * self.s - 1).sign() != 0:
            raise PreconditionViolated("unit(c, s)")

    @classmethod
    def of(cls, c, s) -> "Rotation":
        return cls(as_creal(c), as_creal(s))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Rotation):
            return NotImplemented
        return (self.c - other.c).sign() == 0 and (self.s - other.s).sign() == 0

    __hash__ = None

    def conjugate(self) -> "Rotation":
        return Rotation(self.c, -self.s)

    def approx_degrees(self, digits: int = 6) -> str:
        deg = math.degrees(math.atan2(float(self.s), float(self.c))) % 360.0
        return f"{deg:.{digits}f}"

    def render(self, digits: int = 6) -> dict[str, str]:
        """Trace form: exact cos and sin plus an approximate degree value."""
        return {"cos": self.c.expr(), "sin": self.s.expr(), "approx_degrees": self.approx_degrees(digits)}

    def __repr__(self) -> str:
        return f"Rotation({self.c.expr()}, {self.s.expr()})"


NULL_ANGLE = Rotation.of(1, 0)
STRAIGHT_ANGLE = Rotation.of(-1, 0)
RIGHT_ANGLE = Rotation.of(0, 1)


# -- lengths ----------------------------------------------------------------


def length_of(A: Point, B: Point) -> Length:
    return Length(sqrt(dist2(A, B)))


def length_decide(a: Length, b: Length) -> Order:
    s = (a.value - b.value).sign()
    return Order.Less if s < 0 else Order.Greater if s > 0 else Order.Equal


def length_less(a: Length, b: Length) -> bool:
    return length_decide(a, b) is Order.Less


def length_cotrans(a: Length, b: Length, c: Length) -> Decision:
    """Given a < b: First when a < c, otherwise Second (then c < b)."""
    if not length_less(a, b):
        raise PreconditionViolated("len_less(a, b)")
    return Decision.First if length_less(a, c) else Decision.Second


def length_add(a: Length, b: Length) -> Length:
    return Length(a.value + b.value)


ZERO_LENGTH = Length.of(0)


# -- angles -----------------------------------------------------------------


def measure_of(a: Ray, b: Ray) -> Rotation:
    """The rotation carrying the direction of a onto the direction of b."""
    o = a.origin
    if (o.x - b.origin.x).sign() or (o.y - b.origin.y).sign():
        raise PreconditionViolated("shared_origin(a, b)")
    ux, uy = a.director.x - o.x, a.director.y - o.y
    vx, vy = b.director.x - o.x, b.director.y - o.y
    t = sqrt((ux * ux + uy * uy) * (vx * vx + vy * vy))
    return Rotation((ux * vx + uy * vy) / t, (ux * vy - uy * vx) / t)


def angle_add(alpha: Rotation, beta: Rotation) -> Rotation:
    return Rotation(alpha.c * beta.c - alpha.s * beta.s, alpha.s * beta.c + alpha.c * beta.s)


def angle_classify(alpha: Rotation) -> AngleClass:
    s = alpha.s.sign()
    if s > 0:
        return AngleClass.Convex
    if s < 0:
        return AngleClass.Reflex
    return AngleClass.Null if alpha.c.sign() > 0 else AngleClass.Straight


def angle_decide(alpha: Rotation, beta: Rotation) -> Order:
    ka, kb = angle_classify(alpha), angle_classify(beta)
    if ka is not kb:
        return Order.Less if ka.value < kb.value else Order.Greater
    if ka is AngleClass.Convex:
        s = (beta.c - alpha.c).sign()  # larger cosine, smaller convex angle
    elif ka is AngleClass.Reflex:
        s = (alpha.c - beta.c).sign()  # larger cosine, larger reflex angle
    else:
        s = 0
    return Order.Less if s < 0 else Order.Greater if s > 0 else Order.Equal


def angle_less(alpha: Rotation, beta: Rotation) -> bool:
    return angle_decide(alpha, beta) is Order.Less


def nonoriented_measure(A: Point, O: Point, B: Point) -> Rotation:
    """Measure of the convex angle AOB, always with positive sine."""
    if collinear(A, O, B):
        raise PreconditionViolated("not_collinear(A, O, B)")
    a, b = Ray(O, A), Ray(O, B)
    if orientation(Flag(a, b)) is Orientation.Left:
        return measure_of(a, b)
    return measure_of(b, a)


def angle_representative(alpha: Rotation) -> tuple[Point, Point, Point]:
    """Points (A, O, B) with measure_of(OA, OB) = alpha, using O = (0, 0), A = (1, 0)."""
    return Point.of(1, 0), Point.of(0, 0), Point(alpha.c, alpha.s)


SCRIPT_OPS: dict = {}
