"""Deterministic SVG diagrams of script traces.

Geometry is laid out exactly (bounding box, padding, line clipping) and only the
final coordinates are rounded to decimals.  The y axis points up, as in the model.
"""
from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .cfield import CReal, as_creal, sqrt
from .errors import EmptyTrace
from .model import Line, Point, dist2
from .script.interp import DEFAULT_DIGITS, Trace

POINT_FILL = "#000000"
LINE_STROKE = "#1f5fbf"
CIRCLE_STROKE = "#9a9a9a"
SEGMENT_STROKE = "#c0392b"


@dataclass(frozen=True)
class _Circle:
    centre: Point
    r: CReal


# segments of the figure drawn by each construction, as pairs of argument indices;
# index -1 stands for the step's own result
_SEGMENTS: dict[str, tuple[tuple[int, int], ...]] = {
    "equilateral": ((0, 1), (1, -1), (-1, 0)),
    "point_between": ((0, 1),),
    "point_beyond": ((0, -1),),
    "transfer_segment": ((2, 3), (0, -1)),
    "transfer_angle": ((1, 0), (1, 2), (3, 4), (3, -1)),
    "superpose": ((0, 1), (1, 2), (2, 0), (3, 4), (4, -1), (-1, 3)),
}


def _circles(op: str, args: tuple) -> list[_Circle]:
    """Circles drawn by a step: centre and a point on the circle, taken from its arguments."""
    if op == "cut_line_circle":
        _, O, B = args
        pairs = [(O, B)]
    elif op == "cut_circles":
        O, A, _, O2, A2, _, _ = args
        pairs = [(O, A), (O2, A2)]
    elif op == "equilateral":
        A, B, _ = args
        pairs = [(A, B), (B, A)]
    else:
        return []
    return [_Circle(c, sqrt(dist2(c, p))) for c, p in pairs]


def _segments(op: str, args: tuple, result) -> list[tuple[Point, Point]]:
    pick = lambda j: result if j == -1 else args[j]  # noqa: E731
    return [(pick(a), pick(b)) for a, b in _SEGMENTS.get(op, ())]


@dataclass(frozen=True)
class _Box:
    xmin: CReal
    ymin: CReal
    xmax: CReal
    ymax: CReal

    def contains(self, P: Point) -> bool:
        return self.xmin <= P.x <= self.xmax and self.ymin <= P.y <= self.ymax


def _bounds(xs: list[CReal], ys: list[CReal]) -> _Box:
    """Exact bounding box padded by a tenth of its larger side (one unit when degenerate)."""
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    span = max(xmax - xmin, ymax - ymin)
    pad = span / 10 if span.sign() > 0 else as_creal(1)
    return _Box(xmin - pad, ymin - pad, xmax + pad, ymax + pad)


def clip_line(x: Line, box: _Box) -> tuple[Point, Point] | None:
    """Exact chord of line x inside the box (Liang-Barsky over the parameter of p + t(q - p))."""
    p, q = x.p, x.q
    dx, dy = q.x - p.x, q.y - p.y
    lo: CReal | None = None
    hi: CReal | None = None
    for d, start, low, high in ((dx, p.x, box.xmin, box.xmax), (dy, p.y, box.ymin, box.ymax)):
        if d.sign() == 0:
            if not (low <= start <= high):
                return None
            continue
        t0, t1 = (low - start) / d, (high - start) / d
        if t0 > t1:
            t0, t1 = t1, t0
        lo = t0 if lo is None or t0 > lo else lo
        hi = t1 if hi is None or t1 < hi else hi
    if lo is None or hi is None or lo >= hi:
        return None
    return Point(p.x + lo * dx, p.y + lo * dy), Point(p.x + hi * dx, p.y + hi * dy)


def _n(v: CReal, digits: int) -> str:
    return v.to_decimal(digits)


def render_svg(t: Trace, digits: int = DEFAULT_DIGITS) -> str:
    """SVG 1.1 text of the trace; identical traces give byte-identical output."""
    figures = [s for s in t.steps if s.kind in ("point", "line")]
    if not figures:
        raise EmptyTrace("trace has no points or lines to draw")

    xs: list[CReal] = []
    ys: list[CReal] = []
    for s in figures:
        anchors = [s.value] if s.kind == "point" else [s.value.p, s.value.q]
        for P in anchors:
            xs.append(P.x)
            ys.append(P.y)
        for c in _circles(s.op, s.arg_values):
            xs += [c.centre.x - c.r, c.centre.x + c.r]
            ys += [c.centre.y - c.r, c.centre.y + c.r]
    box = _bounds(xs, ys)
    width, height = box.xmax - box.xmin, box.ymax - box.ymin
    unit = max(width, height) / 100
    n = lambda v: _n(v, digits)  # noqa: E731
    # model y grows upwards, SVG y downwards
    X = lambda P: n(P.x)  # noqa: E731
    Y = lambda P: n(-P.y)  # noqa: E731

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{n(box.xmin)} {n(-box.ymax)} {n(width)} {n(height)}" width="600" '
        f'height="{n(600 * height / width)}">',
        f'<g fill="none" stroke-width="{n(unit / 3)}">',
    ]
    labels: list[str] = []
    font = n(unit * 4)
    for s in figures:
        for c in _circles(s.op, s.arg_values):
            out.append(f'<circle class="construction" cx="{X(c.centre)}" cy="{Y(c.centre)}" '
                       f'r="{n(c.r)}" stroke="{CIRCLE_STROKE}"/>')
        for P, Q in _segments(s.op, s.arg_values, s.value):
            out.append(f'<line class="segment" x1="{X(P)}" y1="{Y(P)}" x2="{X(Q)}" y2="{Y(Q)}" '
                       f'stroke="{SEGMENT_STROKE}"/>')
        name = escape(s.name)
        if s.kind == "point":
            P = s.value
            out.append(f'<circle class="point" cx="{X(P)}" cy="{Y(P)}" r="{n(unit)}" '
                       f'fill="{POINT_FILL}" stroke="none"/>')
            anchor = Point(P.x + unit * 2, P.y + unit * 2)
        else:
            chord = clip_line(s.value, box)
            assert chord is not None  # the line's defining points lie inside the box
            P, Q = chord
            out.append(f'<line class="line" x1="{X(P)}" y1="{Y(P)}" x2="{X(Q)}" y2="{Y(Q)}" '
                       f'stroke="{LINE_STROKE}"/>')
            anchor = Point((P.x + Q.x) / 2 + unit, (P.y + Q.y) / 2 + unit)
        labels.append(f'<text class="label" x="{X(anchor)}" y="{Y(anchor)}" font-size="{font}" '
                      f'font-family="serif" fill="{POINT_FILL}">{name}</text>')
    out.append("</g>")
    out.extend(labels)
    out.append("</svg>")
    return "\n".join(out) + "\n"
