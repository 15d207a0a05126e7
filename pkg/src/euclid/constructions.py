"""Derived constructions, composed from kernel operations only.

Nothing here reads or builds coordinates; every point comes out of a kernel
primitive.  An architecture test scans this module to keep it that way.
"""
from __future__ import annotations

from . import kernel as k
from .errors import PreconditionViolated
from .kernel import Decision, Flag, KernelCtx, Line, Point, Ray


def _require(cond: bool, name: str) -> None:
    if not cond:
        raise PreconditionViolated(name)


# -- lines and points ---------------------------------------------------------


def line_through_point(ctx: KernelCtx, A: Point) -> Line:
    B = k.draw_distinct_point(ctx, A)
    return k.join(A, B)


def any_line(ctx: KernelCtx) -> Line:
    return line_through_point(ctx, k.draw_point(ctx))


def line_avoiding_point(ctx: KernelCtx, A: Point) -> Line:
    B = k.draw_distinct_point(ctx, A)
    y = k.join(A, B)
    C = k.point_off_line(ctx, y)
    # B is on y and C is not, so they differ; A on BC would force BC = y
    return k.join(B, C)


def distinct_line_through(ctx: KernelCtx, A: Point, x: Line) -> Line:
    _require(k.incident(A, x), "incident(A, x)")
    return k.join(A, k.point_off_line(ctx, x))


def any_crossing_line(ctx: KernelCtx, x: Line) -> Line:
    return distinct_line_through(ctx, k.point_on_line(ctx, x), x)


def decide_point_off_two_lines(A: Point, B: Point, x: Line, y: Line) -> Decision:
    """First: B is off x.  Second: B is off y.  Ends in the off-line decision on CD."""
    _require(k.distinct_points(A, B), "distinct(A, B)")
    _require(k.incident(A, x) and k.incident(A, y), "incident(A, x, y)")
    _require(not k.coincide_lines(x, y), "distinct_lines(x, y)")
    z = k.join(A, B)
    C = k.distinct_point_on_line(None, x, A)
    D = k.distinct_point_on_line(None, y, A)
    t = k.join(C, D)
    # C off z means x (through A and C) is not AB, so B is off x; likewise for D
    return k.decide_off_line(C, D, t, z)


def point_beyond(A: Point, B: Point) -> Point:
    _require(k.distinct_points(A, B), "distinct(A, B)")
    return k.cut_line_circle(A, B, A)


def _mirror(P: Point, O: Point) -> Point:
    """Reflection of P through the centre O."""
    return k.cut_line_circle(P, O, P)


def equilateral(A: Point, B: Point, P: Point) -> Point:
    _require(not k.collinear(A, B, P), "not_collinear(A, B, P)")
    return k.cut_circles(A, _mirror(B, A), B, B, A, _mirror(A, B), P)


def _bisector(A: Point, B: Point) -> Line:
    """Perpendicular bisector of AB through the two equilateral apexes."""
    P = k.point_off_line(None, k.join(A, B))
    return k.join(equilateral(A, B, P), equilateral(A, B, _mirror(P, A)))


def point_between(A: Point, B: Point) -> Point:
    _require(k.distinct_points(A, B), "distinct(A, B)")
    return k.meet(_bisector(A, B), k.join(A, B))


def circles_meet(O: Point, R: Point, O2: Point, R2: Point, P: Point) -> Point:
    """Meet of circle O through R and circle O2 through R2, on P's side of line O O2.

    Builds the diametral points both circles need along the centre line.
    """
    _require(k.distinct_points(O, R) and k.distinct_points(O2, R2), "proper_circles")
    A1 = k.cut_line_circle(O2, O, R)
    B1 = k.cut_line_circle(A1, O, R)
    A2 = k.cut_line_circle(k.cut_line_circle(O, O2, O), O2, R2)
    B2 = k.cut_line_circle(O, O2, R2)
    return k.cut_circles(O, A1, B1, O2, A2, B2, P)


def transfer_segment(O: Point, A: Point, B: Point, C: Point) -> Point:
    """Point D on ray OA with |OD| = |BC| (D = O for a null segment)."""
    _require(k.distinct_points(O, A), "distinct(O, A)")
    if k.coincide_points(B, C):
        return O
    back = _mirror(A, O)
    if k.coincide_points(O, B) or k.coincide_points(O, C):
        far = C if k.coincide_points(O, B) else B
        return k.cut_line_circle(back, O, far)
    E = equilateral(O, B, k.point_off_line(None, k.join(O, B)))
    G = k.cut_line_circle(E, B, C)  # |EG| = |EB| + |BC|
    H = k.cut_line_circle(_mirror(O, E), E, G)  # past O on ray EO, |OH| = |BC|
    return k.cut_line_circle(back, O, H)


# -- perpendiculars and parallels -------------------------------------------------


def perpendicular(ctx: KernelCtx | None, A: Point, x: Line) -> Line:
    """Line through A perpendicular to x."""
    U = k.point_on_line(ctx, x)
    V = k.distinct_point_on_line(ctx, x, U)
    if k.incident(A, x):
        W = V if k.distinct_points(A, V) else U
        return _bisector(W, _mirror(W, A))
    mirror = circles_meet(U, A, V, A, _mirror(A, U))
    return k.join(A, mirror)


def parallel_through(ctx: KernelCtx | None, A: Point, x: Line) -> Line:
    if k.incident(A, x):
        return x
    return perpendicular(ctx, A, perpendicular(ctx, A, x))


# -- rays and flags ---------------------------------------------------------------


def _require_divergent(a: Ray, b: Ray) -> None:
    _require(k.coincide_points(a.origin, b.origin), "concurrent(a, b)")
    _require(not k.collinear(a.origin, a.director, b.director), "divergent(a, b)")


def ray_between(a: Ray, b: Ray) -> Ray:
    """A ray strictly inside the convex angle of a and b."""
    _require_divergent(a, b)
    return Ray(a.origin, point_between(a.director, b.director))


def ray_beyond(a: Ray, b: Ray) -> Ray:
    """A ray c with b strictly between a and c."""
    _require_divergent(a, b)
    back = _mirror(a.director, a.origin)
    return Ray(a.origin, point_between(b.director, back))


def decide_ray_direction(a: Ray, b: Ray) -> Decision:
    """First: same direction.  Second: b is opposite to a."""
    _require(
        k.collinear(a.origin, a.director, b.origin) and k.collinear(a.origin, a.director, b.director),
        "collinear_carriers(a, b)",
    )
    return Decision.First if k.same_direction(a, b) else Decision.Second


def decide_flag_orientation(X: Flag, Y: Flag) -> Decision:
    """First: same orientation.  Second: opposite."""
    return Decision.First if k.orientation(X) is k.orientation(Y) else Decision.Second


# -- line decisions -----------------------------------------------------------------


def decide_lines_cross(x: Line, y: Line, z: Line) -> Decision:
    """Given crossing x and y: First when z crosses x, else Second (z crosses y)."""
    _require(k.lines_cross(x, y), "intersect(x, y)")
    return Decision.First if k.lines_cross(x, z) else Decision.Second


def decide_lines_distinct(x: Line, y: Line, z: Line) -> Decision:
    """Given distinct x and y: First when z differs from x, else Second."""
    _require(not k.coincide_lines(x, y), "distinct_lines(x, y)")
    return Decision.First if not k.coincide_lines(x, z) else Decision.Second


SCRIPT_OPS = {
    "line_through": line_through_point,
    "any_line": any_line,
    "line_avoiding": line_avoiding_point,
    "distinct_line_through": distinct_line_through,
    "crossing_line": any_crossing_line,
    "point_between": point_between,
    "point_beyond": point_beyond,
    "equilateral": equilateral,
    "transfer_segment": transfer_segment,
    "parallel_through": parallel_through,
    "decide_lines_cross": decide_lines_cross,
    "decide_lines_distinct": decide_lines_distinct,
}
