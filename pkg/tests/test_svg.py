import xml.etree.ElementTree as ET

from conicpos.svg import ellipse_points, hyperbola_points, parabola_points, svg_text
from conicpos.witnesses import hyperbola_figure_pair, parabola_figure_pair

NS = "{http://www.w3.org/2000/svg}"


def _polylines(text):
    root = ET.fromstring(text)
    return root, root.findall(f".//{NS}polyline")


def test_parabola_figure_svg():
    N, M = parabola_figure_pair(1)
    root, lines = _polylines(svg_text(N, M, "1: Separated"))
    assert len(lines) == 2
    assert [t.text for t in root.iter(f"{NS}text")] == ["1: Separated"]


def test_hyperbola_figure_has_both_branches():
    N, M = hyperbola_figure_pair(9)
    root, lines = _polylines(svg_text(N, M, "9: FourIntersections"))
    # ellipse plus two branches
    assert len(lines) == 3


def test_sampled_points_lie_on_curves():
    P, E = parabola_figure_pair(5)
    H, _ = hyperbola_figure_pair(9)
    for c, (pts,) in ((E, ellipse_points(E)), (P, parabola_points(P, 4.0))):
        f = c.to_float()
        for x, y in pts:
            assert abs(f(x, y)) < 1e-9 * (1 + x * x + y * y)
    f = H.to_float()
    branches = hyperbola_points(H, 4.0)
    assert len(branches) == 2
    for branch in branches:
        for x, y in branch:
            assert abs(f(x, y)) < 1e-9 * (1 + x * x + y * y)
