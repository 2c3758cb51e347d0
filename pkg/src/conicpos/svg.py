"""Static SVG pictures of a conic pair.

Curves are sampled as polylines: the ellipse by angle, a parabola along
its axis-perpendicular coordinate, each hyperbola branch by a hyperbolic
parameter. The viewport is the ellipse's bounding box grown three times
around its centre.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .conic import Conic, ConicClass, classify_type

SAMPLES = 400


def _eigen(a, b, d):
    """Eigenvalues and unit eigenvectors of ``[[a, b], [b, d]]``."""
    th = 0.5 * math.atan2(2 * b, a - d)
    u = (math.cos(th), math.sin(th))
    w = (-u[1], u[0])
    lu = a * u[0] ** 2 + 2 * b * u[0] * u[1] + d * u[1] ** 2
    lw = a * w[0] ** 2 + 2 * b * w[0] * w[1] + d * w[1] ** 2
    return (lu, u), (lw, w)


def _frame(c: Conic):
    m = c.to_float()
    (l1, u), (l2, w) = _eigen(m.m11, m.m12, m.m22)
    # linear coefficients and constant in the rotated frame
    p = m.m13 * u[0] + m.m23 * u[1]
    q = m.m13 * w[0] + m.m23 * w[1]
    return l1, l2, u, w, p, q, m.m33


def _to_xy(u, w, s, t, origin=(0.0, 0.0)):
    return (origin[0] + s * u[0] + t * w[0], origin[1] + s * u[1] + t * w[1])


def ellipse_points(c: Conic, n=SAMPLES):
    l1, l2, u, w, p, q, f = _frame(c)
    if l1 < 0:
        l1, l2, p, q, f = -l1, -l2, -p, -q, -f
    s0, t0 = -p / l1, -q / l2
    k = l1 * s0 * s0 + l2 * t0 * t0 - f
    ra, rb = math.sqrt(max(k, 0.0) / l1), math.sqrt(max(k, 0.0) / l2)
    pts = []
    for i in range(n + 1):
        th = 2 * math.pi * i / n
        pts.append(_to_xy(u, w, s0 + ra * math.cos(th), t0 + rb * math.sin(th)))
    return [pts]


def parabola_points(c: Conic, half_width: float, n=SAMPLES):
    l1, l2, u, w, p, q, f = _frame(c)
    if abs(l1) < abs(l2):
        l1, l2, u, w, p, q = l2, l1, w, u, q, p
    # l1 s^2 + 2 p s + 2 q t + f = 0, solved for t
    s0 = -p / l1
    pts = []
    for i in range(n + 1):
        s = s0 - half_width + 2 * half_width * i / n
        t = -(l1 * s * s + 2 * p * s + f) / (2 * q)
        pts.append(_to_xy(u, w, s, t))
    return [pts]


def hyperbola_points(c: Conic, reach: float, n=SAMPLES):
    l1, l2, u, w, p, q, f = _frame(c)
    s0, t0 = -p / l1, -q / l2
    g = f - l1 * s0 * s0 - l2 * t0 * t0  # l1 S^2 + l2 T^2 + g = 0
    if -g / l1 > 0:
        A, B, swap = math.sqrt(-g / l1), math.sqrt(g / l2), False
    else:
        A, B, swap = math.sqrt(-g / l2), math.sqrt(g / l1), True
    tmax = math.asinh(reach / min(A, B)) + 0.5
    branches = []
    for sign in (1, -1):
        pts = []
        for i in range(n + 1):
            t = -tmax + 2 * tmax * i / n
            S, T = sign * A * math.cosh(t), B * math.sinh(t)
            if swap:
                S, T = T, S
            pts.append(_to_xy(u, w, s0 + S, t0 + T))
        branches.append(pts)
    return branches


def _viewport(ellipse: Conic):
    (pts,) = ellipse_points(ellipse, 64)
    xs, ys = [p[0] for p in pts], [p[1] for p in pts]
    cx, cy = (min(xs) + max(xs)) / 2, (min(ys) + max(ys)) / 2
    hw = 1.5 * max(max(xs) - min(xs), max(ys) - min(ys))
    return cx - hw, cy - hw, 2 * hw


def _polyline(pts, color):
    body = " ".join(f"{x:.6g},{-y:.6g}" for x, y in pts)
    return f'<polyline fill="none" stroke="{color}" stroke-width="{{sw}}" points="{body}"/>'


def svg_text(other: Conic, ellipse: Conic, label: str) -> str:
    x0, y0, size = _viewport(ellipse)
    kind = classify_type(other)
    if kind is ConicClass.PARABOLA:
        curves = parabola_points(other, 2 * size)
    else:
        curves = hyperbola_points(other, 2 * size)
    sw = size / 300
    parts = [_polyline(p, "#1f77b4") for p in curves]
    parts += [_polyline(p, "#d62728") for p in ellipse_points(ellipse)]
    body = "\n".join(s.replace("{sw}", f"{sw:.4g}") for s in parts)
    # y is flipped so the picture has the usual orientation
    vb = f"{x0:.6g} {-(y0 + size):.6g} {size:.6g} {size:.6g}"
    fs = size / 18
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vb}" width="480" height="480">\n'
        f'<rect x="{x0:.6g}" y="{-(y0 + size):.6g}" width="{size:.6g}" height="{size:.6g}" fill="white"/>\n'
        f"{body}\n"
        f'<text x="{x0 + fs / 2:.6g}" y="{-(y0 + size) + 1.2 * fs:.6g}" font-size="{fs:.4g}" '
        f'font-family="sans-serif">{escape(label)}</text>\n'
        "</svg>\n"
    )


def render_svg(other: Conic, ellipse: Conic, label: str, path) -> None:
    """Write the picture of ``other`` (parabola or hyperbola) and ``ellipse`` to ``path``."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(svg_text(other, ellipse, label))
