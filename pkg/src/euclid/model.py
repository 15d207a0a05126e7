"""Coordinate model of points, lines, rays and flags with decidable predicates.

Every predicate reduces to sign tests on exact :class:`CReal` values, so the
model doubles as the oracle for the axiom and theorem suites.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .cfield import CReal, as_creal
from .errors import PreconditionViolated


class Orientation(enum.Enum):
    Left = "Left"
    Right = "Right"


class Decision(enum.Enum):
    First = "First"
    Second = "Second"


class Side(enum.Enum):
    Same = "Same"
    Opposite = "Opposite"
    OnLine = "OnLine"


class Order(enum.Enum):
    Less = "Less"
    Equal = "Equal"
    Greater = "Greater"


@dataclass(frozen=True, eq=False)
class Point:
    x: CReal
    y: CReal

    @classmethod
    def of(cls, x: int | Fraction | str | CReal, y: int | Fraction | str | CReal) -> "Point":
        return cls(as_creal(x), as_creal(y))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Point):
            return NotImplemented
        return coincide_points(self, other)

    __hash__ = None

    def __repr__(self) -> str:
        return f"Point({self.x.expr()}, {self.y.expr()})"


@dataclass(frozen=True, eq=False)
class Line:
    p: Point
    q: Point

    def __post_init__(self) -> None:
        if coincide_points(self.p, self.q):
            raise PreconditionViolated("distinct(p, q)")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Line):
            return NotImplemented
        return coincide_lines(self, other)

    __hash__ = None

    def coefficients(self) -> tuple[CReal, CReal, CReal]:
        """(a, b, c) with a*x + b*y + c = 0 on the line; computed, never stored."""
        p, q = self.p, self.q
        return p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y


@dataclass(frozen=True, eq=False)
class Ray:
    origin: Point
    director: Point

    def __post_init__(self) -> None:
        if coincide_points(self.origin, self.director):
            raise PreconditionViolated("distinct(origin, director)")

    def carrier(self) -> Line:
        return Line(self.origin, self.director)


@dataclass(frozen=True, eq=False)
class Flag:
    initial: Ray
    terminal: Ray

    def __post_init__(self) -> None:
        if not coincide_points(self.initial.origin, self.terminal.origin):
            raise PreconditionViolated("concurrent(initial, terminal)")
        if collinear(self.initial.origin, self.initial.director, self.terminal.director):
            raise PreconditionViolated("divergent(initial, terminal)")

    @property
    def vertex(self) -> Point:
        return self.initial.origin


# ---------------------------------------------------------------------------
# vector helpers


def _vec(a: Point, b: Point) -> tuple[CReal, CReal]:
    return b.x - a.x, b.y - a.y


def _det(u: tuple[CReal, CReal], v: tuple[CReal, CReal]) -> CReal:
    return u[0] * v[1] - u[1] * v[0]


def _dot(u: tuple[CReal, CReal], v: tuple[CReal, CReal]) -> CReal:
    return u[0] * v[0] + u[1] * v[1]


def dist2(A: Point, B: Point) -> CReal:
    """Squared distance, exact and radical-free."""
    u = _vec(A, B)
    return _dot(u, u)


# ---------------------------------------------------------------------------
# incidence


def coincide_points(A: Point, B: Point) -> bool:
    return (A.x - B.x).sign() == 0 and (A.y - B.y).sign() == 0


def distinct_points(A: Point, B: Point) -> bool:
    return not coincide_points(A, B)


def incident(A: Point, x: Line) -> bool:
    return _det(_vec(x.p, x.q), _vec(x.p, A)).sign() == 0


def coincide_lines(x: Line, y: Line) -> bool:
    return incident(x.p, y) and incident(x.q, y)


def collinear(A: Point, B: Point, C: Point) -> bool:
    return _det(_vec(A, B), _vec(A, C)).sign() == 0


def lines_cross(x: Line, y: Line) -> bool:
    """Lines meet in exactly one point: distinct with non-parallel directions."""
    return _det(_vec(x.p, x.q), _vec(y.p, y.q)).sign() != 0


def parallel(x: Line, y: Line) -> bool:
    """Lines do not intersect in a single point; coincident lines count as parallel."""
    return not lines_cross(x, y)


# ---------------------------------------------------------------------------
# betweenness


def between(A: Point, B: Point, C: Point) -> bool:
    """Strict: B lies strictly inside segment AC."""
    if not collinear(A, B, C):
        return False
    if coincide_points(A, B) or coincide_points(B, C):
        return False
    return _dot(_vec(B, A), _vec(B, C)).sign() < 0


def between_ox(A: Point, B: Point, C: Point) -> bool:
    """Admits A = B (but not B = C)."""
    return between(A, B, C) or (coincide_points(A, B) and not coincide_points(B, C))


def between_xo(A: Point, B: Point, C: Point) -> bool:
    """Admits B = C (but not A = B)."""
    return between(A, B, C) or (not coincide_points(A, B) and coincide_points(B, C))


def between_oo(A: Point, B: Point, C: Point) -> bool:
    """Admits A = B or B = C."""
    return between(A, B, C) or coincide_points(A, B) or coincide_points(B, C)


def ordered4(A: Point, B: Point, C: Point, D: Point) -> bool:
    return between(A, B, C) and between(A, B, D) and between(A, C, D) and between(B, C, D)


def _side_sign(x: Line, A: Point) -> int:
    return _det(_vec(x.p, x.q), _vec(x.p, A)).sign()


def side_of_line(x: Line, A: Point, B: Point) -> Side:
    sa, sb = _side_sign(x, A), _side_sign(x, B)
    if sa == 0 or sb == 0:
        return Side.OnLine
    return Side.Same if sa == sb else Side.Opposite


def same_side(x: Line, A: Point, B: Point) -> bool:
    return side_of_line(x, A, B) is Side.Same


def opposite_side(x: Line, A: Point, B: Point) -> bool:
    return side_of_line(x, A, B) is Side.Opposite


def same_ray(O: Point, A: Point, B: Point) -> bool:
    """A and B lie on the same half-line issuing from O."""
    if coincide_points(O, A) or coincide_points(O, B):
        return False
    return collinear(O, A, B) and not between(A, O, B)


# ---------------------------------------------------------------------------
# rays


def rays_coincide(a: Ray, b: Ray) -> bool:
    return coincide_points(a.origin, b.origin) and same_ray(a.origin, a.director, b.director)


def opposite_ray(a: Ray) -> Ray:
    o, d = a.origin, a.director
    return Ray(o, Point(o.x + o.x - d.x, o.y + o.y - d.y))


def same_direction(a: Ray, b: Ray) -> bool:
    """Collinear carriers and positively aligned direction vectors."""
    if not (collinear(a.origin, a.director, b.origin) and collinear(a.origin, a.director, b.director)):
        return False
    return _dot(_vec(a.origin, a.director), _vec(b.origin, b.director)).sign() > 0


def same_direction_by_cases(a: Ray, b: Ray) -> bool:
    """The three-alternative definition, kept literal as the reference for ``same_direction``."""
    a0, a1, b0, b1 = a.origin, a.director, b.origin, b.director
    return (
        (coincide_points(a0, b0) and same_ray(a0, a1, b1))
        or (same_ray(a0, a1, b0) and between(a0, b0, b1))
        or (same_ray(b0, b1, a0) and between(b0, a0, a1))
    )


def _require_concurrent(*rays: Ray) -> None:
    o = rays[0].origin
    if not all(coincide_points(o, r.origin) for r in rays[1:]):
        raise PreconditionViolated("concurrent(rays)")


def ray_same_side(a: Ray, b: Ray, c: Ray) -> bool:
    """b and c point into the same half-plane of the carrier of a."""
    _require_concurrent(a, b, c)
    return same_side(a.carrier(), b.director, c.director)


def ray_between(a: Ray, b: Ray, c: Ray) -> bool:
    return ray_same_side(a, b, c) and ray_same_side(c, b, a)


# ---------------------------------------------------------------------------
# flags and orientation

REFERENCE_FLAG = Flag(
    Ray(Point.of(0, 0), Point.of(1, 0)),
    Ray(Point.of(0, 0), Point.of(0, 1)),
)


def orientation(X: Flag) -> Orientation:
    o = X.vertex
    d = _det(_vec(o, X.initial.director), _vec(o, X.terminal.director))
    return Orientation.Left if d.sign() > 0 else Orientation.Right


def flip(X: Flag) -> Flag:
    """Same initial ray, terminal ray reversed: the other half-plane."""
    return Flag(X.initial, opposite_ray(X.terminal))


def reverse(X: Flag) -> Flag:
    """Both rays reversed."""
    return Flag(opposite_ray(X.initial), opposite_ray(X.terminal))


def flag_equiv_rot(X: Flag, Y: Flag) -> bool:
    """Rotational equivalence of flags sharing a vertex, by its four alternatives."""
    if not coincide_points(X.vertex, Y.vertex):
        raise PreconditionViolated("shared_vertex(X, Y)")
    x0, x1, y0, y1 = X.initial, X.terminal, Y.initial, Y.terminal
    return (
        (rays_coincide(x0, y0) and ray_same_side(x0, x1, y1))
        or (rays_coincide(x0, opposite_ray(y0)) and ray_same_side(x0, y1, opposite_ray(x1)))
        or (ray_same_side(x0, x1, y0) and ray_same_side(y0, y1, opposite_ray(x0)))
        or (ray_same_side(y0, y1, x0) and ray_same_side(x0, x1, opposite_ray(y0)))
    )


def flag_equiv_tr(X: Flag, Y: Flag) -> bool:
    """Translational equivalence: same-direction initial rays, terminals on one side."""
    if not same_direction(X.initial, Y.initial):
        raise PreconditionViolated("same_direction(X.initial, Y.initial)")
    return same_side(X.initial.carrier(), X.terminal.director, Y.terminal.director)


def flag_equiv(X: Flag, Y: Flag) -> bool:
    return orientation(X) is orientation(Y)


__all__ = [
    "Orientation", "Decision", "Side", "Order", "Point", "Line", "Ray", "Flag",
    "dist2", "coincide_points", "distinct_points", "incident", "coincide_lines", "collinear",
    "lines_cross", "parallel", "between", "between_ox", "between_xo", "between_oo",
    "ordered4", "side_of_line", "same_side", "opposite_side", "same_ray", "rays_coincide",
    "opposite_ray", "same_direction", "same_direction_by_cases", "ray_same_side",
    "ray_between", "REFERENCE_FLAG", "orientation", "flip", "reverse", "flag_equiv_rot",
    "flag_equiv_tr", "flag_equiv",
]
