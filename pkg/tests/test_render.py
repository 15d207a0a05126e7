from __future__ import annotations

import xml.etree.ElementTree as ET
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import CORPUS
from euclid.errors import EmptyTrace
from euclid.render import render_svg
from euclid.script import execute, parse

NS = "{http://www.w3.org/2000/svg}"

I1 = "let A = (0, 0)\nlet B = (1, 0)\nlet P = (0, 1)\nlet C = equilateral(A, B, P)\n"


def _svg(src: str, seed: int = 0) -> ET.Element:
    return ET.fromstring(render_svg(execute(parse(src), seed=seed)))


def _classes(root: ET.Element, tag: str, cls: str) -> list[ET.Element]:
    return [e for e in root.iter(NS + tag) if e.get("class") == cls]


def test_single_point():
    root = _svg("let A = (0, 0)\n")
    assert len(_classes(root, "circle", "point")) == 1
    assert [e.text for e in _classes(root, "text", "label")] == ["A"]


def test_equilateral_figure():
    root = _svg(I1)
    assert len(_classes(root, "circle", "construction")) == 2
    assert len(_classes(root, "line", "segment")) == 3
    # P is only the side hint, but it is a bound point and gets a label too
    assert sorted(e.text for e in _classes(root, "text", "label")) == ["A", "B", "C", "P"]


def test_construction_circles_have_exact_radii():
    root = _svg(I1)
    radii = {e.get("r") for e in _classes(root, "circle", "construction")}
    assert radii == {"1.000000"}


def test_empty_trace():
    with pytest.raises(EmptyTrace):
        render_svg(execute(parse("# nothing to draw\n")))


@pytest.mark.parametrize("src", sorted((CORPUS / "golden").glob("*.euc")), ids=lambda p: p.stem)
def test_golden_svg_is_well_formed_and_stable(src):
    text = src.read_text()
    a = render_svg(execute(parse(text), seed=0))
    b = render_svg(execute(parse(text), seed=0))
    assert a == b
    root = ET.fromstring(a)
    assert root.tag == NS + "svg"


def _inside(root: ET.Element) -> bool:
    x0, y0, w, h = (float(v) for v in root.get("viewBox").split())
    eps = 1e-4 * max(w, h)
    ok = lambda x, y: x0 - eps <= x <= x0 + w + eps and y0 - eps <= y <= y0 + h + eps  # noqa: E731
    for e in root.iter(NS + "circle"):
        cx, cy, r = float(e.get("cx")), float(e.get("cy")), float(e.get("r"))
        if e.get("class") == "construction" and not (ok(cx - r, cy - r) and ok(cx + r, cy + r)):
            return False
        if not ok(cx, cy):
            return False
    for e in root.iter(NS + "line"):
        if not (ok(float(e.get("x1")), float(e.get("y1"))) and ok(float(e.get("x2")), float(e.get("y2")))):
            return False
    return True


coords = st.fractions(min_value=-50, max_value=50, max_denominator=7)


@given(st.lists(st.tuples(coords, coords), min_size=2, max_size=5, unique=True), st.integers(0, 99))
def test_figures_stay_inside_the_viewport(pts, seed):
    names = "ABCDE"
    lines = [f"let {names[i]} = ({x}, {y})" for i, (x, y) in enumerate(pts)]
    lines.append("let l = join(A, B)")
    lines.append("let m = point_off(l)")
    lines.append("let k = line_avoiding(m)")
    root = _svg("\n".join(lines) + "\n", seed)
    assert _inside(root)


def test_viewport_contains_circles():
    for src in (I1, (CORPUS / "golden" / "circle_circle.euc").read_text()):
        assert _inside(_svg(src))


def test_coordinates_are_fixed_decimals():
    root = _svg("let A = (1/3, 0)\nlet B = (0, 2/3)\n")
    xs = sorted(e.get("cx") for e in _classes(root, "circle", "point"))
    assert xs == ["0.000000", "0.333333"]
