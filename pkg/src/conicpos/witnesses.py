"""Exact witnesses for every case and random instance generators.

Tangent configurations come from prescribing the roots of the quartic cut
out on a parametrised curve by a circle: a double root is a tangency, a
triple root an osculation.
"""

from __future__ import annotations

import random
from fractions import Fraction as Q

from .classify_hyperbola import CanonicalHyperbolaCircle
from .classify_hyperbola import canonical_conics as hyperbola_conics
from .classify_parabola import CanonicalParabolaCircle
from .classify_parabola import canonical_conics as parabola_conics
from .conic import Conic
from .errors import InvalidParams


def circle_on_parabola(p, q, r):
    """Circle meeting ``x^2 = 2y`` where ``x^4 + p x^2 + q x + r = 0``.

    Returns ``(xc, yc, deltaSq)``; raises InvalidParams for an empty circle.
    """
    p, q, r = Q(p), Q(q), Q(r)
    d1, d2, d3 = q / 4, (p - 4) / 2, r / 4
    rad = d1 * d1 / 4 + d2 * d2 / 4 - d3
    if rad <= 0:
        raise InvalidParams("prescribed roots give no real circle")
    return -d1 / 2, -d2 / 2, rad


def parabola_tangent_circle(s, w):
    """Circle tangent to ``x^2 = 2y`` at ``x = s``; quartic ``(x-s)^2 (x^2 + 2sx + w)``."""
    s, w = Q(s), Q(w)
    # (x^2 - 2sx + s^2)(x^2 + 2sx + w)
    p = w - 4 * s * s + s * s
    q = 2 * s * s * s - 2 * s * w
    r = s * s * w
    return circle_on_parabola(p, q, r)


def parabola_osculating_circle(s):
    """Osculating circle of ``x^2 = 2y`` at ``x = s``; quartic ``(x-s)^3 (x+3s)``."""
    s = Q(s)
    return circle_on_parabola(-6 * s * s, 8 * s ** 3, -3 * s ** 4)


def circle_on_hyperbola(a, b, e3, e2, e1):
    """Circle meeting ``x^2/a^2 - y^2/b^2 + 1 = 0`` at ``s^4 + e3 s^3 + e2 s^2 + e1 s + 1``.

    The hyperbola is parametrised by ``x = a(s^2-1)/(2s)``, ``y = b(s^2+1)/(2s)``;
    ``a`` and ``b`` are the (rational) semi-axes. Returns ``(xc, yc, deltaSq)``.
    """
    a, b = Q(a), Q(b)
    e3, e2, e1 = Q(e3), Q(e2), Q(e1)
    k = a * a + b * b
    d1 = k * (e3 - e1) / (4 * a)
    d2 = k * (e3 + e1) / (4 * b)
    d3 = (k * e2 + 2 * a * a - 2 * b * b) / 4
    rad = d1 * d1 / 4 + d2 * d2 / 4 - d3
    if rad <= 0:
        raise InvalidParams("prescribed roots give no real circle")
    return -d1 / 2, -d2 / 2, rad


def _quartic_from_roots(r1, r2, r3, r4):
    """``(e3, e2, e1)`` of a monic quartic with the given roots (product 1)."""
    e3 = -(r1 + r2 + r3 + r4)
    e2 = r1 * r2 + r1 * r3 + r1 * r4 + r2 * r3 + r2 * r4 + r3 * r4
    e1 = -(r1 * r2 * r3 + r1 * r2 * r4 + r1 * r3 * r4 + r2 * r3 * r4)
    return e3, e2, e1


def hyperbola_tangent_circle(a, b, t, u):
    """Circle tangent to the hyperbola at parameter ``t`` and meeting it at ``u``, ``1/(t^2 u)``."""
    t, u = Q(t), Q(u)
    return circle_on_hyperbola(a, b, *_quartic_from_roots(t, t, u, 1 / (t * t * u)))


def hyperbola_tangent_circle_q(a, b, t, beta):
    """Tangent at parameter ``t``; remaining roots solve ``s^2 + beta*s + 1/t^2`` (maybe complex)."""
    t, beta = Q(t), Q(beta)
    c = 1 / (t * t)
    return circle_on_hyperbola(a, b, beta - 2 * t, c - 2 * t * beta + t * t, t * t * beta - 2 * t * c)


def hyperbola_osculating_circle(a, b, t):
    """Osculating circle at parameter ``t``; quartic ``(s-t)^3 (s - 1/t^3)``."""
    t = Q(t)
    return circle_on_hyperbola(a, b, *_quartic_from_roots(t, t, t, 1 / t ** 3))


# one witness per case: (aSq, xc, yc, deltaSq)
PARABOLA_FIGURES = {
    1: (Q(1), Q(0), Q(-3), Q(1)),
    2: (Q(1), Q(0), Q(-1), Q(1)),
    3: (Q(1), Q(0), Q(2), Q(1, 4)),
    4: (Q(1), Q(0), Q(0), Q(1)),
    5: (Q(1), Q(0), Q(9, 4), Q(65, 16)),
    # quartic x^2 (x^2 - 4)
    6: (Q(1), Q(0), Q(2), Q(4)),
    # osculating circle at the vertex
    7: (Q(1), Q(0), Q(1), Q(1)),
    8: (Q(1), Q(0), Q(13, 2), Q(12)),
    9: (Q(1),) + parabola_osculating_circle(1),
}

# (aSq, bSq, xc, yc, deltaSq)
HYPERBOLA_FIGURES = {
    1: (Q(1), Q(1), Q(0), Q(0), Q(1, 4)),
    2: (Q(1), Q(1), Q(0), Q(1), Q(1, 4)),
    # osculating circle at the vertex (0, b)
    3: (Q(1), Q(1), Q(0), Q(2), Q(1)),
    4: (Q(1), Q(1), Q(0), Q(3), Q(7, 2)),
    5: (Q(1), Q(1), Q(0), Q(3), Q(4)),
    6: (Q(1), Q(1), Q(0), Q(1, 2), Q(1, 4)),
    # roots {1, 1, -4}
    7: (Q(4), Q(1), Q(0), Q(0), Q(1)),
    8: (Q(1), Q(1), Q(0), Q(-1, 2), Q(9, 4)),
    9: (Q(1), Q(1), Q(0), Q(0), Q(2)),
    10: (Q(1), Q(1), Q(3), Q(5), Q(1)),
    11: (Q(1), Q(1)) + hyperbola_osculating_circle(1, 1, 2),
}

# extra panels: the completion witness and the osculating circle at (0, -b)
EXTRA_PARABOLA = {3: (Q(1), Q(0), Q(1, 2), Q(1, 16))}
EXTRA_HYPERBOLA = {3: (Q(1), Q(1), Q(0), Q(-2), Q(1))}


def parabola_figure(case: int) -> CanonicalParabolaCircle:
    return CanonicalParabolaCircle.from_center(*PARABOLA_FIGURES[case])


def hyperbola_figure(case: int) -> CanonicalHyperbolaCircle:
    return CanonicalHyperbolaCircle.from_center(*HYPERBOLA_FIGURES[case])


def parabola_figure_pair(case: int):
    return parabola_conics(*PARABOLA_FIGURES[case])


def hyperbola_figure_pair(case: int):
    return hyperbola_conics(*HYPERBOLA_FIGURES[case])


# -- random corpora --------------------------------------------------------

_HALVES = [Q(k, 2) for k in range(-8, 9)]
_POS = [Q(1, 4), Q(1, 2), Q(1), Q(9, 4), Q(2), Q(4), Q(3)]
_DSQ = [Q(k, 4) for k in range(1, 33)] + [Q(1, 16), Q(9, 16)]


def random_parabola_params(rng: random.Random):
    """``(aSq, xc, yc, deltaSq)`` from a coarse grid so that boundaries get hit."""
    return (rng.choice(_POS), rng.choice(_HALVES), rng.choice(_HALVES), rng.choice(_DSQ))


def random_hyperbola_params(rng: random.Random):
    return (rng.choice(_POS), rng.choice(_POS), rng.choice(_HALVES), rng.choice(_HALVES),
            rng.choice(_DSQ))


def random_parabola_tangency(rng: random.Random):
    """A parabola-circle pair with at least one exact tangency, scaled to random ``a^2``."""
    while True:
        s = Q(rng.randint(-6, 6), rng.choice((1, 2, 3)))
        kind = rng.random()
        try:
            if kind < 0.2:
                xc, yc, d2 = parabola_osculating_circle(s)
            else:
                w = Q(rng.randint(-12, 12), rng.choice((1, 2, 4)))
                xc, yc, d2 = parabola_tangent_circle(s, w)
        except InvalidParams:
            continue
        k = rng.choice(_POS)
        # x^2/a^2 = 2y scales lengths by a^2
        return (k, xc * k, yc * k, d2 * k * k)


_SQUARES = [Q(1), Q(2), Q(1, 2), Q(3), Q(3, 2)]


def random_hyperbola_tangency(rng: random.Random):
    while True:
        a, b = rng.choice(_SQUARES), rng.choice(_SQUARES)
        t = Q(rng.choice((-3, -2, -1, 1, 2, 3)), rng.choice((1, 2, 3)))
        try:
            kind = rng.random()
            if kind < 0.2:
                xc, yc, d2 = hyperbola_osculating_circle(a, b, t)
            elif kind < 0.5:
                beta = Q(rng.randint(-8, 8), rng.choice((1, 2, 3)))
                xc, yc, d2 = hyperbola_tangent_circle_q(a, b, t, beta)
            else:
                u = Q(rng.choice((-5, -3, -2, -1, 1, 2, 3, 5)), rng.choice((1, 2)))
                xc, yc, d2 = hyperbola_tangent_circle(a, b, t, u)
        except InvalidParams:
            continue
        return (a * a, b * b, xc, yc, d2)


def rational_rotation(t):
    """Rotation by the angle with ``tan(angle/2) = t``; exact over Q."""
    t = Q(t)
    c = (1 - t * t) / (1 + t * t)
    s = 2 * t / (1 + t * t)
    return c, s


def rigid_scaling_map(t, tx, ty, k):
    """Row-vector map of a rotation, a uniform scaling by ``k`` and a translation.

    Suitable for :meth:`Conic.transformed`.
    """
    c, s = rational_rotation(t)
    k = Q(k)
    return ((c * k, s * k, 0), (-s * k, c * k, 0), (Q(tx), Q(ty), 1))


def random_rigid_map(rng: random.Random):
    return rigid_scaling_map(
        Q(rng.randint(-5, 5), rng.randint(1, 4)),
        Q(rng.randint(-9, 9), rng.randint(1, 3)),
        Q(rng.randint(-9, 9), rng.randint(1, 3)),
        Q(rng.randint(1, 6), rng.randint(1, 4)),
    )


def random_affine_map(rng: random.Random):
    """Invertible rational affine map (shears included)."""
    while True:
        m = [Q(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(4)]
        if m[0] * m[3] - m[1] * m[2]:
            break
    return ((m[0], m[1], 0), (m[2], m[3], 0),
            (Q(rng.randint(-9, 9), rng.randint(1, 3)), Q(rng.randint(-9, 9), rng.randint(1, 3)), 1))


def transform_pair(N: Conic, M: Conic, A, kn=1, km=1):
    """Move both conics by ``A`` and rescale their matrices by ``kn`` and ``km``."""
    return N.transformed(A).scaled(Q(kn)), M.transformed(A).scaled(Q(km))
