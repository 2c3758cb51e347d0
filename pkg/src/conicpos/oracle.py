"""Independent checks that never look at the sign tables.

Two oracles live here:

* the root-pattern oracle isolates the real roots of the canonical cubic
  exactly (Sturm sequences over the rationals) and reads the case off where
  they sit relative to ``-a^2`` (and ``b^2`` for a hyperbola);
* the geometric oracle intersects the two conics through a resultant and
  reports real intersection points with multiplicities, which is coarser
  but shares nothing with the invariant machinery.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import _poly
from .classify_hyperbola import CanonicalHyperbolaCircle
from .classify_parabola import CanonicalParabolaCircle
from .conic import Conic, ConicClass, classify_type
from .errors import CommonComponent, LeadingZero, PatternUnmatched
from .numeric import QuadExt, Sign, sign_exact
from .pencil import Cubic

REFINE_WIDTH = Fraction(1, 2 ** 40)


# -- root isolation ---------------------------------------------------------

@dataclass(frozen=True)
class RealRoot:
    """A real root known exactly or through an isolating interval.

    ``factor`` is the square-free factor it belongs to, which is all that
    :func:`compare_root` needs to place the root against any threshold.
    """

    lo: Fraction
    hi: Fraction
    exact: Optional[Fraction]
    multiplicity: int
    factor: tuple = field(repr=False, default=())

    def __float__(self):
        if self.exact is not None:
            return float(self.exact)
        return float((self.lo + self.hi) / 2)


@dataclass(frozen=True)
class RootPattern:
    roots: tuple  # ascending RealRoot values
    complex_pairs: int

    @property
    def multiplicities(self) -> tuple:
        return tuple(r.multiplicity for r in self.roots)


def _rational_coeff(c):
    if isinstance(c, QuadExt):
        return Fraction(c.rational())
    if isinstance(c, float):
        return Fraction(c)
    return Fraction(c)


def isolate_cubic_roots(f, width=REFINE_WIDTH) -> RootPattern:
    """Real roots of a rational cubic with multiplicities.

    ``f`` is a :class:`Cubic` or a descending coefficient sequence. Simple
    irrational roots are refined below ``width`` (skip with ``None``).
    """
    coeffs = f.coeffs if isinstance(f, Cubic) else tuple(f)
    coeffs = [_rational_coeff(c) for c in coeffs]
    if len(coeffs) != 4 or coeffs[0] == 0:
        raise LeadingZero("leading coefficient is zero")
    roots = []
    real_count = 0
    for factor, mult in _poly.square_free_decomposition(coeffs):
        if len(factor) == 2:
            r = -factor[1] / factor[0]
            roots.append(RealRoot(r, r, r, mult, tuple(factor)))
            real_count += mult
            continue
        for lo, hi, ex in _poly.isolate(factor):
            if ex is None and width is not None:
                lo, hi = _poly.refine(factor, lo, hi, width)
                if lo == hi:
                    ex = lo
            roots.append(RealRoot(lo, hi, ex, mult, tuple(factor)))
            real_count += mult
    roots.sort(key=lambda r: (r.lo, r.hi))
    return RootPattern(tuple(roots), (3 - real_count) // 2)


def compare_root(root: RealRoot, theta) -> int:
    """Sign of ``root - theta`` for a rational or :class:`QuadExt` ``theta``."""
    if root.exact is not None:
        return int(sign_exact(root.exact - theta))
    if sign_exact(theta - root.lo) is not Sign.POSITIVE:
        return 1
    if sign_exact(root.hi - theta) is not Sign.POSITIVE:
        return -1
    # theta is strictly inside the isolating interval
    v = sign_exact(_poly.evaluate(root.factor, theta))
    if v is Sign.ZERO:
        return 0
    s_lo = sign_exact(_poly.evaluate(root.factor, root.lo))
    # same sign as at lo means theta is still left of the root
    return 1 if v is s_lo else -1


def _roots_with_mult(pattern: RootPattern):
    """Flat ascending list of ``(root, multiplicity)``."""
    return [(r, r.multiplicity) for r in pattern.roots]


# -- parabola ---------------------------------------------------------------

def root_pattern_classify_parabola(p: CanonicalParabolaCircle, completion: bool = True) -> int:
    """Case 1..9 of a canonical parabola-circle pair from its root pattern.

    The circle on the axis below the centre of curvature, strictly inside,
    has three distinct negative roots with the smallest at ``-a^2``; it is
    reported as case 3 unless ``completion`` is off.
    """
    p.validate()
    a2 = p.aSq
    d2 = p.deltaSq
    pat = isolate_cubic_roots(p.cubic(), width=None)
    if pat.complex_pairs:
        return 4
    rs = _roots_with_mult(pat)
    t = -a2
    pos = [r for r, _ in rs if compare_root(r, 0) > 0]
    key = ("parabola", pat.multiplicities)
    if pos:
        if len(rs) == 3 and len(pos) == 2:
            return 1
        if len(pos) == 1 and pos[0].multiplicity == 2:
            return 2
        raise PatternUnmatched("positive roots in unexpected arrangement", key)
    rel = [compare_root(r, t) for r, _ in rs]
    ad = sign_exact(a2 * a2 - d2)
    if len(rs) == 3:
        if rel[2] <= 0:
            return 5
        if rel[0] < 0 and rel[1] >= 0:
            return 3
        if rel[0] == 0 and completion:
            return 3
        raise PatternUnmatched("three simple roots not separated by -a^2", key)
    if len(rs) == 2:
        (r_a, m_a), (r_b, m_b) = rs
        (rd, rel_d), (rs_, rel_s) = ((r_a, rel[0]), (r_b, rel[1])) if m_a == 2 else \
            ((r_b, rel[1]), (r_a, rel[0]))
        if rel_d > 0:
            return 7
        if rel_d < 0 and rel_s <= 0 and ad is not Sign.POSITIVE:
            return 6
        if rel_d == 0 and compare_root(rs_, -d2 / a2) == 0:
            if ad is Sign.POSITIVE:
                return 3
            if ad is Sign.NEGATIVE:
                return 8
        raise PatternUnmatched("double root in unexpected position", key)
    rel_t = rel[0]
    if rel_t == 0:
        return 7
    if rel_t < 0:
        return 9
    raise PatternUnmatched("triple root right of -a^2", key)


# -- hyperbola --------------------------------------------------------------

def root_pattern_classify_hyperbola(h: CanonicalHyperbolaCircle) -> int:
    """Case 1..11 of a canonical hyperbola-circle pair from its root pattern.

    Comparisons with ``b*delta`` go through squares, so every test stays in
    the field of the parameters.
    """
    h.validate()
    a2, b2, d2 = h.aSq, h.bSq, h.deltaSq
    pat = isolate_cubic_roots(h.cubic(), width=None)
    if pat.complex_pairs:
        return 2
    rs = _roots_with_mult(pat)
    key = ("hyperbola", pat.multiplicities)
    bd2 = b2 * d2  # (b*delta)^2
    # sign(a^2 - b*delta)
    a_bd = sign_exact(a2 * a2 - bd2)
    b_d = sign_exact(b2 - d2)
    pos = [(r, m) for r, m in rs if compare_root(r, 0) > 0]
    if pos:
        if len(pos) == 1 and pos[0][1] == 2:
            rd = pos[0][0]
            c = compare_root(rd, b2)
            if c < 0:
                return 6
            if c == 0 and b_d is not Sign.POSITIVE:
                return 7
            if c > 0 and b_d is Sign.NEGATIVE:
                return 8
        if len(pos) == 2 and len(rs) == 3:
            if compare_root(pos[1][0], b2) <= 0:
                return 1
            if compare_root(pos[0][0], b2) >= 0:
                return 9
        raise PatternUnmatched("positive roots in unexpected arrangement", key)
    t = -a2
    rel = [compare_root(r, t) for r, _ in rs]
    if len(rs) == 3:
        if rel[2] <= 0:
            return 9
        if (rel[0] < 0 <= rel[1]) or (rel[0] <= 0 < rel[1]):
            return 10
        raise PatternUnmatched("three simple roots not separated by -a^2", key)
    if len(rs) == 2:
        if rs[0][1] == 2:
            (rd, rel_d), (rs_, rel_s) = (rs[0][0], rel[0]), (rs[1][0], rel[1])
        else:
            (rd, rel_d), (rs_, rel_s) = (rs[1][0], rel[1]), (rs[0][0], rel[0])
        if rel_d == 0:
            if compare_root(rs_, -bd2 / a2) == 0:
                if a_bd is Sign.NEGATIVE:
                    return 4
                if a_bd is Sign.POSITIVE:
                    return 10
            raise PatternUnmatched("double root at -a^2 with unexpected partner", key)
        # a double root of a rational cubic is rational
        dsq = sign_exact(rd.exact * rd.exact - bd2)
        if rel_d > 0:
            if rel_s < 0:
                return 3
            if rel_s == 0 and dsq is Sign.ZERO and a_bd is not Sign.NEGATIVE:
                return 3
        else:
            if rel_s < 0:
                return 5
            if rel_s == 0 and dsq is Sign.ZERO and a_bd is Sign.NEGATIVE:
                return 5
        raise PatternUnmatched("double root in unexpected position", key)
    if rel[0] == 0:
        return 3
    if rel[0] < 0:
        return 11
    raise PatternUnmatched("triple root right of -a^2", key)


def root_pattern_classify_pair(N: Conic, M: Conic) -> int:
    """Root-pattern case of a general exact pair, through the exact reduction."""
    from .reduce import reduce_hyperbola_pair, reduce_parabola_pair, unit_scaled

    kind = classify_type(N)
    if kind is ConicClass.PARABOLA:
        can, _ = reduce_parabola_pair(N, M)
        return root_pattern_classify_parabola(unit_scaled(can))
    can, _ = reduce_hyperbola_pair(N, M)
    return root_pattern_classify_hyperbola(can)


# -- geometric oracle -------------------------------------------------------

@dataclass(frozen=True)
class IntersectionPoint:
    x: float
    y: float
    multiplicity: int
    # exact isolating interval of the sheared abscissa
    interval: tuple


@dataclass(frozen=True)
class IntersectionSummary:
    points: tuple
    shear: int
    resultant: tuple  # descending rational coefficients

    @property
    def multiplicities(self) -> tuple:
        return tuple(sorted(p.multiplicity for p in self.points))


def _sheared_parts(c: Conic, s):
    """``alpha*y^2 + beta(x)*y + gamma(x)`` after substituting ``x -> x - s*y``."""
    a, b, cc, d, e, f = (Fraction(v) for v in c.entries)
    alpha = a * s * s - 2 * b * s + d
    beta = [-2 * a * s + 2 * b, 2 * e - 2 * cc * s]
    gamma = [a, 2 * cc, f]
    return alpha, beta, gamma


def _resultant(c1: Conic, c2: Conic, s):
    a1, b1, g1 = _sheared_parts(c1, s)
    a2, b2, g2 = _sheared_parts(c2, s)
    P = _poly
    u = P.sub(P.mul([a1], g2), P.mul([a2], g1))      # alpha1*gamma2 - alpha2*gamma1
    v = P.sub(P.mul([a1], b2), P.mul([a2], b1))      # alpha1*beta2 - alpha2*beta1
    w = P.sub(P.mul(b1, g2), P.mul(b2, g1))          # beta1*gamma2 - beta2*gamma1
    return P.sub(P.mul(u, u), P.mul(v, w)), u, v


def intersect_conics(c1: Conic, c2: Conic) -> IntersectionSummary:
    """Real intersection points of two exact conics with multiplicities.

    One of the conics must have a definite quadratic part (the ellipse), so
    the sheared ``y^2`` coefficient never vanishes for it. Shears ``s = 0..6``
    are tried and the one separating the most points is kept.
    """
    best = None
    for s in range(7):
        R, u, v = _resultant(c1, c2, s)
        if not R:
            raise CommonComponent("the conics share a component")
        parts = _poly.square_free_decomposition(R)
        distinct = sum(len(f) - 1 for f, _ in parts)
        if best is None or distinct > best[0]:
            best = (distinct, s, R, parts, u, v)
        if distinct == len(R) - 1:
            break
    _, s, R, parts, u, v = best
    pts = []
    for factor, mult in parts:
        for lo, hi, ex in _poly.isolate(factor):
            if ex is None:
                lo, hi = _poly.refine(factor, lo, hi, Fraction(1, 2 ** 60))
            xs = float(ex) if ex is not None else float((lo + hi) / 2)
            y = _common_y(c1, c2, s, xs, u, v)
            pts.append(IntersectionPoint(xs - s * y, y, mult, (lo, hi)))
    pts.sort(key=lambda p: (p.x, p.y))
    return IntersectionSummary(tuple(pts), s, tuple(R))


def _common_y(c1, c2, s, x, u, v):
    """Shared ordinate at sheared abscissa ``x``."""
    vv = _poly.evaluate([float(c) for c in v], x)
    uu = _poly.evaluate([float(c) for c in u], x)
    if abs(vv) > 1e-12 * (1 + abs(uu)):
        return -uu / vv
    # fall back to the root of the ellipse-like quadratic closest to the other conic
    a1, b1, g1 = _sheared_parts(c1, s)
    A = float(a1)
    B = _poly.evaluate([float(c) for c in b1], x)
    C = _poly.evaluate([float(c) for c in g1], x)
    disc = max(B * B - 4 * A * C, 0.0)
    cands = [(-B + sg * math.sqrt(disc)) / (2 * A) for sg in (1, -1)] if A else [-C / B]
    return min(cands, key=lambda y: abs(c2.to_float()(x - s * y, y)))


def _grad(c: Conic, x, y):
    m = c.to_float()
    return (m.m11 * x + m.m12 * y + m.m13, m.m12 * x + m.m22 * y + m.m23)


def tangency_side(other: Conic, ellipse: Conic, pt: IntersectionPoint) -> str:
    """``"inner"`` when both curves bend to the same side of their common tangent."""
    g = _grad(ellipse, pt.x, pt.y)
    t = (-g[1], g[0])
    sides = []
    for c in (ellipse, other):
        m = c.to_float()
        curv = m.m11 * t[0] ** 2 + 2 * m.m12 * t[0] * t[1] + m.m22 * t[1] ** 2
        gc = _grad(c, pt.x, pt.y)
        dot = gc[0] * g[0] + gc[1] * g[1]
        sides.append(-math.copysign(1.0, curv) * math.copysign(1.0, dot))
    return "inner" if sides[0] == sides[1] else "outer"


@dataclass(frozen=True)
class CoarseClass:
    multiplicities: tuple
    center_sign: int  # sign of the other conic at the ellipse centre
    tangencies: tuple  # "inner"/"outer" for points with multiplicity >= 2


def coarse_class(other: Conic, ellipse: Conic) -> CoarseClass:
    """Geometric summary of a parabola/hyperbola ``other`` and an ellipse.

    ``other`` should be normalised (det < 0) so that negative values mean
    the region between the branches or inside the parabola.
    """
    summ = intersect_conics(ellipse, other)
    cx, cy = ellipse.center()
    cs = int(sign_exact(other(cx, cy)))
    tang = tuple(tangency_side(other, ellipse, p) for p in summ.points if p.multiplicity >= 2)
    return CoarseClass(summ.multiplicities, cs, tang)


# (allowed multiplicity patterns, centre sign or None, tangency kind or None)
EXPECTED_COARSE = {
    "parabola": {
        1: ({()}, 1, None),
        2: ({(2,)}, 1, "outer"),
        3: ({()}, -1, None),
        4: ({(1, 1)}, None, None),
        5: ({(1, 1, 1, 1)}, None, None),
        6: ({(1, 1, 2)}, None, "inner"),
        7: ({(2,), (4,)}, -1, "inner"),
        8: ({(2, 2)}, -1, "inner"),
        9: ({(1, 3)}, None, "inner"),
    },
    "hyperbola": {
        1: ({()}, 1, None),
        2: ({(1, 1)}, None, None),
        3: ({(2,), (4,)}, -1, "inner"),
        4: ({(2, 2)}, -1, "inner"),
        5: ({(1, 1, 2)}, None, "inner"),
        6: ({(2,)}, 1, "outer"),
        7: ({(2, 2)}, 1, "outer"),
        8: ({(1, 1, 2)}, None, "outer"),
        9: ({(1, 1, 1, 1)}, None, None),
        10: ({()}, -1, None),
        11: ({(1, 3)}, None, "inner"),
    },
}


def coarse_agrees(kind: str, case: int, cc: CoarseClass) -> bool:
    """Whether a geometric summary is compatible with a classified case."""
    pats, cs, tang = EXPECTED_COARSE[kind][case]
    if cc.multiplicities not in pats:
        return False
    if cs is not None and cc.center_sign != cs:
        return False
    if tang is not None and any(t != tang for t in cc.tangencies):
        return False
    return True


# -- counterexample log -----------------------------------------------------

def _jsonable(x):
    if isinstance(x, (Fraction, QuadExt)):
        return str(x)
    if isinstance(x, Conic):
        return [_jsonable(v) for v in x.entries]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if hasattr(x, "__dict__") and not isinstance(x, type):
        return _jsonable(vars(x))
    return x if isinstance(x, (int, float, str, bool, type(None))) else str(x)


def log_counterexample(path, record: dict) -> None:
    """Append one JSON line with exact values written as strings."""
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(_jsonable(record), sort_keys=True) + "\n")
