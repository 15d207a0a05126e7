"""Triangles, congruence, constructive superposition and angle transfer.

Like the constructions layer, this module builds points only through kernel
primitives and constructions.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import kernel as k
from .constructions import circles_meet, transfer_segment
from .errors import PreconditionViolated
from .kernel import Point, Ray
from .quantities import (
    AngleClass,
    Rotation,
    angle_classify,
    angle_representative,
    length_of,
    nonoriented_measure,
)


def _require(cond: bool, name: str) -> None:
    if not cond:
        raise PreconditionViolated(name)


@dataclass(frozen=True, eq=False)
class Triangle:
    a: Point
    b: Point
    c: Point

    def __post_init__(self) -> None:
        _require(not k.collinear(self.a, self.b, self.c), "not_collinear(a, b, c)")

    def sides(self):
        """Lengths |ab|, |bc|, |ca|."""
        return length_of(self.a, self.b), length_of(self.b, self.c), length_of(self.c, self.a)

    def angles(self):
        """Nonoriented measures at a, b, c."""
        a, b, c = self.a, self.b, self.c
        return nonoriented_measure(c, a, b), nonoriented_measure(a, b, c), nonoriented_measure(b, c, a)


def _same_len2(P: Point, Q: Point, R: Point, S: Point) -> bool:
    return (k.dist2(P, Q) - k.dist2(R, S)).sign() == 0


def congruent(T1: Triangle, T2: Triangle) -> bool:
    """Matching sides and matching nonoriented angles, vertex for vertex."""
    if not all(x == y for x, y in zip(T1.sides(), T2.sides())):
        return False
    return all(x == y for x, y in zip(T1.angles(), T2.angles()))


def superpose(A: Point, B: Point, C: Point, D: Point, E: Point, F_side: Point) -> Point:
    """F' on F_side's side of DE with triangle DEF' congruent to ABC."""
    _require(not k.collinear(A, B, C), "not_collinear(A, B, C)")
    _require(not k.collinear(D, E, F_side), "not_collinear(D, E, F)")
    _require(_same_len2(A, B, D, E), "len_eq(A, B, D, E)")
    R1 = transfer_segment(D, E, A, C)  # |D R1| = |AC|
    R2 = transfer_segment(E, D, B, C)  # |E R2| = |BC|
    return circles_meet(D, R1, E, R2, F_side)


def transfer_angle(A: Point, O: Point, B: Point, O2: Point, A2: Point, P: Point) -> Point:
    """A point P' on P's side of O2A2 making angle A2 O2 P' equal to angle A O B."""
    _require(not k.collinear(A, O, B), "not_collinear(A, O, B)")
    _require(k.distinct_points(O2, A2), "distinct(O2, A2)")
    _require(not k.collinear(O2, A2, P), "not_collinear(O2, A2, P)")
    A3 = transfer_segment(O2, A2, O, A)
    return superpose(O, A, B, O2, A3, P)


def transfer_angle_ray(A: Point, O: Point, B: Point, a: Ray, P: Point) -> Ray:
    return Ray(a.origin, transfer_angle(A, O, B, a.origin, a.director, P))


def draw_angle_oriented(a: Ray, alpha: Rotation) -> Ray:
    """The ray b with measure_of(a, b) = alpha."""
    kind = angle_classify(alpha)
    O = a.origin
    if kind is AngleClass.Null:
        return a
    if kind is AngleClass.Straight:
        return Ray(O, k.cut_line_circle(a.director, O, a.director))
    left = k.point_off_line(None, k.join(O, a.director))
    if kind is AngleClass.Convex:
        return transfer_angle_ray(*angle_representative(alpha), a, left)
    right = k.cut_line_circle(left, O, left)
    return transfer_angle_ray(*angle_representative(alpha.conjugate()), a, right)


SCRIPT_OPS = {
    "transfer_angle": transfer_angle,
    "superpose": superpose,
}
