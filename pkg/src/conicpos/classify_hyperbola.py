"""Relative position of a hyperbola and an ellipse from sign conditions.

The canonical classifier works on ``x^2/a^2 - y^2/b^2 + 1 = 0`` and a circle
through the coefficient signs of ``f(l)``, ``g(l) = f(l - a^2)`` and
``q(l) = f(l + b^2)``. The general classifier reaches the same signs
through the J and K quantities, which live in Q(sqrt(D)) with
``D = T^2 - 4*T1*T2``.

With ``h = T + sqrt(D)`` and ``k = T - sqrt(D)`` (so ``H0 = h/(2 T1)``,
``H2 = k/(2 T1)``) every J/K is multiplied by a positive power of ``2 T1``
to clear denominators; this does not change its sign.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction

from .conic import Conic, ConicClass, float_normalized_entries, integer_scaled, normalize
from .decision import Branch, Verdict, decide
from .errors import InvalidParams
from .numeric import QuadExt, Sign, float_signs, resolve_tol, sign_exact, sign_sqrt_minus
from .pencil import (Cubic, disc_prime_terms, disc_terms, invariants, invariants_float, shift,
                     sign_variations)


class HyperbolaEllipsePosition(IntEnum):
    INDETERMINATE = 0
    SEPARATED = 1
    TWO_INTERSECTIONS = 2
    ONE_INNER_TANGENT = 3
    TWO_INNER_TANGENTS = 4
    TWO_INTERSECTIONS_AND_INNER_TANGENT = 5
    ONE_OUTER_TANGENT = 6
    TWO_OUTER_TANGENTS = 7
    TWO_INTERSECTIONS_AND_OUTER_TANGENT = 8
    FOUR_INTERSECTIONS = 9
    ELLIPSE_INSIDE_HYPERBOLA = 10
    ONE_INTERSECTION_AND_INNER_TANGENT = 11

    @property
    def label(self) -> str:
        return "".join(w.capitalize() for w in self.name.split("_"))


H = HyperbolaEllipsePosition

# VarG3 is Var(L0, J5, J4), used when J3 = 0
GENERAL_RULES = (
    Branch.of(1, "1", "Delta>0, VarF==2, VarQ==0"),
    Branch.of(2, "2", "Delta<0"),
    Branch.of(3, "3a", "Delta==0, VarF==0, J3!=0, VarG==2"),
    Branch.of(3, "3b", "J3==0, J4==0, J5==0"),
    Branch.of(3, "3c", "J1==0, J3==0, J4!=0, J5>0"),
    Branch.of(4, "4", "J3==0, J4==0, J5<0"),
    Branch.of(5, "5a", "Delta==0, DeltaPrime!=0, VarG==0, J3!=0"),
    Branch.of(5, "5b", "Delta==0, VarG3==0, J3==0, J5<0, J1==0"),
    Branch.of(6, "6", "Delta==0, VarF==2, VarQ==0, K3!=0"),
    Branch.of(7, "7", "K3==0, K4==0"),
    Branch.of(8, "8", "Delta==0, VarQ==2, K3!=0"),
    Branch.of(9, "9a", "Delta>0, VarG==0"),
    Branch.of(9, "9b", "Delta>0, VarQ>0"),
    Branch.of(10, "10a", "Delta>0, VarF==0, J3!=0, VarG==2"),
    Branch.of(10, "10b", "Delta>0, VarF==0, J3==0, J4!=0, VarG3>0"),
    Branch.of(10, "10c", "J3==0, J4==0, J5>0"),
    Branch.of(11, "11", "Delta==0, DeltaPrime==0, J3<0, J5<0"),
)

# aP = coefficients of g, aPP = coefficients of q, YB = sign(|yc| - (b + delta))
CANONICAL_RULES = (
    Branch.of(1, "1", "Delta>0, VarF==2, VarQ==0"),
    Branch.of(2, "2", "Delta<0"),
    Branch.of(3, "3a", "Delta==0, VarF==0, VarG==2, a0P!=0"),
    Branch.of(3, "3b", "a0P==0, a2P>=0, YB==0"),
    Branch.of(4, "4", "a0P==0, a1P==0, a2P<0"),
    Branch.of(5, "5a", "Delta==0, DeltaPrime!=0, VarG==0, a0P!=0"),
    Branch.of(5, "5b", "a0P==0, YB==0, a2P<0"),
    Branch.of(6, "6", "Delta==0, VarF==2, VarQ==0, a0PP!=0"),
    Branch.of(7, "7", "a0PP==0, a1PP==0"),
    Branch.of(8, "8", "Delta==0, VarQ==2, a0PP!=0"),
    Branch.of(9, "9a", "Delta>0, VarG==0"),
    Branch.of(9, "9b", "Delta>0, VarQ>0"),
    Branch.of(10, "10a", "VarF==0, Delta>0, a0P!=0, VarG==2"),
    Branch.of(10, "10b", "VarF==0, Delta>0, a0P==0, a1P!=0, VarG>0"),
    Branch.of(10, "10c", "VarF==0, a0P==0, a1P==0, a2P>0"),
    Branch.of(11, "11", "Delta==0, DeltaPrime==0, a0P<0, a2P<0"),
)


def j5_terms(L0, L1, L2, L3, T1, h):
    return (-6 * L0 * T1, L1 * h)


def j4_terms(L0, L1, L2, L3, T1, h):
    return (12 * L0 * T1 * T1, -4 * T1 * L1 * h, L2 * h * h)


def j3_terms(L0, L1, L2, L3, T1, h):
    return (-8 * L0 * T1 ** 3, 4 * T1 * T1 * L1 * h, -2 * T1 * L2 * h * h, L3 * h ** 3)


def k3_terms(L0, L1, L2, L3, T1, k):
    return (8 * L0 * T1 ** 3, -4 * T1 * T1 * L1 * k, 2 * T1 * L2 * k * k, -L3 * k ** 3)


# sign(J1) = sign(sqrt(A) - B) after clearing positive factors
def j1_radicand_terms(L0, L1, L2, L3, T1, h):
    return (2 * L3 * L0 * T1 * h ** 3,)


def j1_offset_terms(L0, L1, L2, L3, T1, h):
    return (2 * T1 * T1 * L0, -T1 * h * L1)


@dataclass(frozen=True)
class HyperbolaSignData:
    Delta: Sign
    DeltaPrime: Sign
    VarF: object
    VarG: object
    VarG3: object
    VarQ: object
    J1: Sign
    J3: Sign
    J4: Sign
    J5: Sign
    K3: Sign
    K4: Sign
    K5: Sign

    def as_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass(frozen=True)
class CanonicalHyperbolaCircle:
    """Hyperbola ``x^2/a^2 - y^2/b^2 + 1 = 0`` and a circle of radius delta.

    The centre enters only through ``xc**2`` and ``yc**2``; for a reduced
    pair these squares lie in Q(sqrt(D)) while the centre itself may not.
    """

    aSq: object
    bSq: object
    xc_sq: object
    yc_sq: object
    deltaSq: object

    @classmethod
    def from_center(cls, aSq, bSq, xc, yc, deltaSq):
        return cls(aSq, bSq, xc * xc, yc * yc, deltaSq)

    def validate(self):
        for name in ("aSq", "bSq", "deltaSq"):
            if sign_exact(_exact(getattr(self, name))) is not Sign.POSITIVE:
                raise InvalidParams(f"{name} must be positive")
        for name in ("xc_sq", "yc_sq"):
            if sign_exact(_exact(getattr(self, name))) is Sign.NEGATIVE:
                raise InvalidParams(f"{name} must be nonnegative")
        return self

    def cubic(self) -> Cubic:
        a2, b2, xs, ys, d2 = (_exact(v) for v in
                              (self.aSq, self.bSq, self.xc_sq, self.yc_sq, self.deltaSq))
        ab = _frac(a2 * b2)
        return Cubic(
            -1 / ab,
            -(a2 - b2 - d2 + xs + ys) / ab,
            (a2 * b2 + a2 * d2 - a2 * ys - b2 * d2 + b2 * xs) / ab,
            -d2,
        )

    def scaled(self, k) -> "CanonicalHyperbolaCircle":
        k2 = k * k
        return CanonicalHyperbolaCircle(self.aSq * k2, self.bSq * k2, self.xc_sq * k2,
                                        self.yc_sq * k2, self.deltaSq * k2)


def _exact(v):
    if isinstance(v, float):
        return Fraction(v)
    return v


def _frac(v):
    return Fraction(v) if isinstance(v, int) else v


def canonical_conics(aSq, bSq, xc, yc, deltaSq):
    """Explicit (hyperbola, circle) matrices of a canonical configuration."""
    Nh = Conic(1 / _frac(aSq), 0, 0, -1 / _frac(bSq), 0, 1)
    M = Conic(1, 0, -xc, 1, -yc, xc * xc + yc * yc - deltaSq)
    return Nh, M


def _pencil_signs(inv, sgn):
    s = {
        "Delta": sgn("Delta"),
        "DeltaPrime": sgn("DeltaPrime"),
    }
    Ls = [sgn(k) for k in ("L0", "L1", "L2", "L3")]
    s["VarF"] = sign_variations(Ls)
    return s, Ls[0]


def _finish(s, L0):
    s["VarG"] = sign_variations((L0, s["J5"], s["J4"], s["J3"]))
    s["VarG3"] = sign_variations((L0, s["J5"], s["J4"]))
    s["VarQ"] = sign_variations((L0, s["K5"], s["K4"], s["K3"]))
    return s


def _sign_data_exact(Nh: Conic, M: Conic):
    M, Nh = integer_scaled(M), integer_scaled(Nh)
    inv = invariants(M, Nh)
    s, sL0 = _pencil_signs(inv, lambda k: sign_exact(getattr(inv, k)))
    L0, L1, L2, L3, T1, T2, T = (inv.L0, inv.L1, inv.L2, inv.L3, inv.T1, inv.T2, inv.T)
    D = T * T - 4 * T1 * T2
    h = QuadExt(T, 1, D)
    k = QuadExt(T, -1, D)
    args_h = (L0, L1, L2, L3, T1, h)
    args_k = (L0, L1, L2, L3, T1, k)
    s["J5"] = sign_exact(sum(j5_terms(*args_h)))
    s["J4"] = sign_exact(sum(j4_terms(*args_h)))
    s["J3"] = sign_exact(sum(j3_terms(*args_h)))
    # K5 = -3 L0 / H2 + L1; dividing by H2 < 0 flips the sign
    s["K5"] = -sign_exact(sum(j5_terms(*args_k)))
    s["K4"] = sign_exact(sum(j4_terms(*args_k)))
    s["K3"] = sign_exact(sum(k3_terms(*args_k)))
    s["J1"] = sign_sqrt_minus(sum(j1_radicand_terms(*args_h)), sum(j1_offset_terms(*args_h)))
    return _finish(s, sL0), inv


def _sign_data_float(Nh, M, tol: float):
    # normalised entry tuples, see _prepare
    inv = invariants_float(M, Nh)
    mg = inv.mags
    L0, L1, L2, L3, T1, T2, T = (inv.L0, inv.L1, inv.L2, inv.L3, inv.T1, inv.T2, inv.T)
    D = T * T - 4 * T1 * T2
    mD = mg["T"] ** 2 + 4 * mg["T1"] * mg["T2"]
    r = math.sqrt(max(D, 0.0))
    # the root pair of t^2 - T t + T1 T2 without cancellation
    if T >= 0:
        h = T + r
        k = 4 * T1 * T2 / h
    else:
        k = T - r
        h = 4 * T1 * T2 / k
    mh = mg["T"] + math.sqrt(mD)
    a0, a1, a2, a3, t1 = mg["L0"], mg["L1"], mg["L2"], mg["L3"], mg["T1"]
    # the *_terms functions written out; magnitudes use mh for both roots
    m5 = 6 * a0 * t1 + a1 * mh
    m4 = 12 * a0 * t1 * t1 + 4 * t1 * a1 * mh + a2 * mh * mh
    m3 = 8 * a0 * t1 ** 3 + 4 * t1 * t1 * a1 * mh + 2 * t1 * a2 * mh * mh + a3 * mh ** 3
    c3 = L0 * T1 ** 3
    pairs = {name: (getattr(inv, name), mg[name]) for name in
             ("Delta", "DeltaPrime", "L0", "L1", "L2", "L3")}
    pairs["J5"] = (-6 * L0 * T1 + L1 * h, m5)
    pairs["J4"] = (12 * L0 * T1 * T1 - 4 * T1 * L1 * h + L2 * h * h, m4)
    pairs["J3"] = (-8 * c3 + 4 * T1 * T1 * L1 * h - 2 * T1 * L2 * h * h + L3 * h ** 3, m3)
    pairs["K5"] = (-6 * L0 * T1 + L1 * k, m5)
    pairs["K4"] = (12 * L0 * T1 * T1 - 4 * T1 * L1 * k + L2 * k * k, m4)
    pairs["K3"] = (8 * c3 - 4 * T1 * T1 * L1 * k + 2 * T1 * L2 * k * k - L3 * k ** 3, m3)
    a, ma = 2 * L3 * L0 * T1 * h ** 3, 2 * a3 * a0 * t1 * mh ** 3
    b, mb = 2 * T1 * T1 * L0 - T1 * h * L1, 2 * t1 * t1 * a0 + t1 * mh * a1
    pairs["J1"] = (math.sqrt(max(a, 0.0)) - b, math.sqrt(ma) + mb)
    s = float_signs(pairs, tol)
    s["K5"] = -s["K5"]
    sL = [s.pop(k) for k in ("L0", "L1", "L2", "L3")]
    s["VarF"] = sign_variations(sL)
    return _finish(s, sL[0]), inv


def _prepare(Nh: Conic, M: Conic, arithmetic, tol):
    exact = Nh.is_exact and M.is_exact if arithmetic is None else arithmetic == "exact"
    if exact and not (Nh.is_exact and M.is_exact):
        raise ValueError("exact arithmetic needs rational coefficients")
    tol = resolve_tol(tol)
    if not exact:
        Nh = float_normalized_entries(Nh, ConicClass.HYPERBOLA, tol)
        M = float_normalized_entries(M, ConicClass.REAL_ELLIPSE, tol)
        return Nh, M, exact, tol
    Nh = normalize(Nh, ConicClass.HYPERBOLA, tol)
    M = normalize(M, ConicClass.REAL_ELLIPSE, tol)
    return Nh, M, exact, tol


def sign_data(Nh: Conic, M: Conic, arithmetic=None, tol=None) -> HyperbolaSignData:
    """Signs of every quantity the general hyperbola classifier consults."""
    Nh, M, exact, tol = _prepare(Nh, M, arithmetic, tol)
    s, _ = _sign_data_exact(Nh, M) if exact else _sign_data_float(Nh, M, tol)
    return HyperbolaSignData(**s)


def classify_general(Nh: Conic, M: Conic, arithmetic=None, tol=None) -> Verdict:
    """Position of hyperbola ``Nh`` and real ellipse ``M`` from invariant signs."""
    Nh, M, exact, tol = _prepare(Nh, M, arithmetic, tol)
    s, inv = _sign_data_exact(Nh, M) if exact else _sign_data_float(Nh, M, tol)
    v = decide(GENERAL_RULES, s, H, exact)
    v.extra["invariants"] = inv
    return v


def _sign_abs_minus_sum(x_sq, u_sq, v_sq):
    """sign(|x| - (u + v)) for nonnegative u, v, given only squares."""
    w = x_sq - u_sq - v_sq
    # |x| - (u+v) has the sign of x^2 - (u+v)^2 = w - 2uv
    return -sign_sqrt_minus(4 * u_sq * v_sq, w)


def canonical_sign_data(h: CanonicalHyperbolaCircle) -> dict:
    h.validate()
    f = h.cubic()
    a2, b2 = _exact(h.aSq), _exact(h.bSq)
    g = shift(f, -a2)
    q = shift(f, b2)
    c = f.coeffs
    sf = [sign_exact(x) for x in c]
    sg = [sign_exact(x) for x in g.coeffs]
    sq = [sign_exact(x) for x in q.coeffs]
    return {
        "Delta": sign_exact(sum(disc_terms(*c))),
        "DeltaPrime": sign_exact(sum(disc_prime_terms(*c[:3]))),
        "VarF": sign_variations(sf),
        "VarG": sign_variations(sg),
        "VarQ": sign_variations(sq),
        "a2P": sg[1], "a1P": sg[2], "a0P": sg[3],
        "a1PP": sq[2], "a0PP": sq[3],
        "YB": _sign_abs_minus_sum(_exact(h.yc_sq), b2, _exact(h.deltaSq)),
    }


def classify_canonical(h: CanonicalHyperbolaCircle) -> Verdict:
    """Position of a canonical hyperbola and circle from coefficient signs."""
    return decide(CANONICAL_RULES, canonical_sign_data(h), H, True)
