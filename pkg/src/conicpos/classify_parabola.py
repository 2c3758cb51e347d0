"""Relative position of a parabola and an ellipse from sign conditions.

Two entry points share one set of cases:

* :func:`classify_canonical` takes a parabola ``x^2/a^2 = 2y`` and a circle
  and reads signs off the coefficients of ``f(l)`` and ``g(l) = f(l - a^2)``.
* :func:`classify_general` takes any parabola and any real ellipse and only
  uses the pencil invariants, never the intersection points.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction

from .conic import Conic, ConicClass, float_normalized_entries, integer_scaled, normalize
from .decision import Branch, Verdict, decide
from .errors import InvalidParams
from .numeric import Sign, float_signs, resolve_tol, sign_exact
from .pencil import (Cubic, disc_prime_terms, disc_terms, invariants, invariants_float, shift,
                     sign_variations)


class ParabolaEllipsePosition(IntEnum):
    INDETERMINATE = 0
    SEPARATED = 1
    EXTERNALLY_TANGENT = 2
    ELLIPSE_INSIDE_PARABOLA = 3
    TWO_INTERSECTIONS = 4
    FOUR_INTERSECTIONS = 5
    TWO_INTERSECTIONS_AND_INNER_TANGENT = 6
    ONE_INNER_TANGENT = 7
    TWO_INNER_TANGENTS = 8
    ONE_INTERSECTION_AND_INNER_TANGENT = 9

    @property
    def label(self) -> str:
        return "".join(w.capitalize() for w in self.name.split("_"))


P = ParabolaEllipsePosition

# general form, cases in order 1..9
GENERAL_RULES = (
    Branch.of(1, "1a", "Delta>0, L1>0"),
    Branch.of(1, "1b", "Delta>0, L2>0"),
    Branch.of(2, "2a", "Delta==0, L1>0"),
    Branch.of(2, "2b", "Delta==0, L2>0"),
    Branch.of(3, "3a", "Delta>0, L1<0, L2<0, I4>0"),
    Branch.of(3, "3b", "Delta>0, L1<0, L2<0, I5>=0, I4<=0, I3<0"),
    Branch.of(3, "3c", "I3==0, I4==0, I5>0"),
    # circle centred on the axis, strictly inside, below the curvature centre
    Branch.of(3, "3d", "Delta>0, L1<0, L2<0, I3==0, I5>0, I4<0", "completion"),
    Branch.of(4, "4", "Delta<0"),
    Branch.of(5, "5", "Delta>0, I4<0, I5<0"),
    Branch.of(6, "6", "I2<=0, Delta==0, DeltaPrime!=0, I4<0, I5<0"),
    Branch.of(7, "7a", "Delta==0, L1<0, L2<0, I3<0, I4>0"),
    Branch.of(7, "7b", "Delta==0, L1<0, L2<0, I3<0, I5>0"),
    Branch.of(7, "7c", "Delta==0, L1<0, L2<0, I3==0, I5>0, I4<0"),
    Branch.of(7, "7d", "I3==0, I5==0, I4==0"),
    Branch.of(8, "8", "I3==0, I4==0, I5<0"),
    Branch.of(9, "9", "Delta==0, DeltaPrime==0, I3<0, I5<0"),
)

# canonical form; cP = c' coefficients of g, AD = sign(a^2 - delta)
CANONICAL_RULES = (
    Branch.of(1, "1a", "Delta>0, c1>0"),
    Branch.of(1, "1b", "Delta>0, c2>0"),
    Branch.of(2, "2a", "Delta==0, c1>0"),
    Branch.of(2, "2b", "Delta==0, c2>0"),
    Branch.of(3, "3a", "Delta>0, c1<0, c2<0, VarC==1"),
    Branch.of(3, "3b", "c3P==0, c2P==0, AD>0"),
    Branch.of(3, "3c", "Delta>0, c1<0, c2<0, c3P==0, c1P>0, c2P<0", "completion"),
    Branch.of(4, "4", "Delta<0"),
    Branch.of(5, "5", "Delta>0, c2P<0, c1P<0"),
    Branch.of(6, "6", "AD<=0, Delta==0, DeltaPrime!=0, c2P<0, c1P<0"),
    Branch.of(7, "7a", "Delta==0, c1<0, c2<0, c3P<0, c2P>0"),
    Branch.of(7, "7b", "Delta==0, c1<0, c2<0, c3P<0, c1P>0"),
    Branch.of(7, "7c", "Delta==0, c1<0, c2<0, c3P==0, c1P>0, c2P<0"),
    Branch.of(7, "7d", "c1P==0, c2P==0, c3P==0"),
    Branch.of(8, "8", "AD<0, c3P==0, c2P==0"),
    Branch.of(9, "9", "Delta==0, DeltaPrime==0, c1P<0, c3P<0"),
)


def i5_terms(L0, L1, L2, L3, T1, T):
    return (-3 * L0 * T1, L1 * T)


def i4_terms(L0, L1, L2, L3, T1, T):
    return (3 * L0 * T1 * T1, -2 * L1 * T * T1, L2 * T * T)


def i3_terms(L0, L1, L2, L3, T1, T):
    return (-L0 * T1 ** 3, L1 * T * T1 * T1, -L2 * T * T * T1, L3 * T ** 3)


def i2_terms(L0, L1, L2, L3, T1, T):
    return (-T1 ** 3 * L0, L3 * T ** 3)


_I_TERMS = {"I5": i5_terms, "I4": i4_terms, "I3": i3_terms, "I2": i2_terms}


@dataclass(frozen=True)
class ParabolaSignData:
    Delta: Sign
    DeltaPrime: Sign
    L1: Sign
    L2: Sign
    I2: Sign
    I3: Sign
    I4: Sign
    I5: Sign

    def as_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass(frozen=True)
class CanonicalParabolaCircle:
    """Parabola ``x^2/a^2 - 2y = 0`` and circle ``(x-xc)^2 + (y-yc)^2 = delta^2``.

    Only ``xc**2`` is stored: the position is symmetric in ``x`` and a
    reduced pair may have an irrational ``xc`` whose square is rational.
    Entries may be rationals or :class:`QuadExt` values of one field.
    """

    aSq: object
    xc_sq: object
    yc: object
    deltaSq: object

    @classmethod
    def from_center(cls, aSq, xc, yc, deltaSq):
        return cls(aSq, xc * xc, yc, deltaSq)

    def validate(self):
        for name in ("aSq", "deltaSq"):
            if sign_exact(_exact(getattr(self, name))) is not Sign.POSITIVE:
                raise InvalidParams(f"{name} must be positive")
        if sign_exact(_exact(self.xc_sq)) is Sign.NEGATIVE:
            raise InvalidParams("xc_sq must be nonnegative")
        return self

    def cubic(self) -> Cubic:
        """Coefficients of det(l*N + M) for the canonical matrices."""
        a2, xs, yc, d2 = (_exact(v) for v in (self.aSq, self.xc_sq, self.yc, self.deltaSq))
        return Cubic(
            -1 / _frac(a2),
            -(a2 + 2 * yc) / _frac(a2),
            -(2 * a2 * yc + d2 - xs) / _frac(a2),
            -d2,
        )

    def scaled(self, k) -> "CanonicalParabolaCircle":
        """The same picture with all lengths multiplied by ``k > 0``."""
        return CanonicalParabolaCircle(self.aSq * k, self.xc_sq * k * k, self.yc * k,
                                       self.deltaSq * k * k)


def _exact(v):
    if isinstance(v, float):
        return Fraction(v)
    return v


def _frac(v):
    return Fraction(v) if isinstance(v, int) else v


def canonical_conics(aSq, xc, yc, deltaSq):
    """Explicit (parabola, circle) matrices of a canonical configuration."""
    N = Conic(1 / _frac(aSq), 0, 0, 0, -1, 0)
    M = Conic(1, 0, -xc, 1, -yc, xc * xc + yc * yc - deltaSq)
    return N, M


def _sign_data_general(N: Conic, M: Conic, exact: bool, tol: float):
    if exact:
        M, N = integer_scaled(M), integer_scaled(N)
        inv = invariants(M, N)
        args = (inv.L0, inv.L1, inv.L2, inv.L3, inv.T1, inv.T)
        vals = {k: sign_exact(sum(fn(*args))) for k, fn in _I_TERMS.items()}
        s = {"Delta": sign_exact(inv.Delta), "DeltaPrime": sign_exact(inv.DeltaPrime),
             "L1": sign_exact(inv.L1), "L2": sign_exact(inv.L2)}
        return {**s, **vals}, inv
    # float mode receives normalised entry tuples
    inv = invariants_float(M, N)
    mg = inv.mags
    args = (inv.L0, inv.L1, inv.L2, inv.L3, inv.T1, inv.T)
    margs = (mg["L0"], mg["L1"], mg["L2"], mg["L3"], mg["T1"], mg["T"])
    pairs = {k: (getattr(inv, k), mg[k]) for k in ("Delta", "DeltaPrime", "L1", "L2")}
    for k, fn in _I_TERMS.items():
        pairs[k] = (sum(fn(*args)), sum(map(abs, fn(*margs))))
    return float_signs(pairs, tol), inv


def _prepare(N: Conic, M: Conic, arithmetic, tol):
    exact = N.is_exact and M.is_exact if arithmetic is None else arithmetic == "exact"
    if exact and not (N.is_exact and M.is_exact):
        raise ValueError("exact arithmetic needs rational coefficients")
    tol = resolve_tol(tol)
    if not exact:
        N = float_normalized_entries(N, ConicClass.PARABOLA, tol)
        M = float_normalized_entries(M, ConicClass.REAL_ELLIPSE, tol)
        return N, M, exact, tol
    N = normalize(N, ConicClass.PARABOLA, tol)
    M = normalize(M, ConicClass.REAL_ELLIPSE, tol)
    return N, M, exact, tol


def sign_data(N: Conic, M: Conic, arithmetic=None, tol=None) -> ParabolaSignData:
    """Signs of Delta, Delta', L1, L2 and I2..I5 for parabola ``N`` and ellipse ``M``."""
    N, M, exact, tol = _prepare(N, M, arithmetic, tol)
    s, _ = _sign_data_general(N, M, exact, tol)
    return ParabolaSignData(**s)


def classify_general(N: Conic, M: Conic, arithmetic=None, tol=None,
                     paper_only: bool = False) -> Verdict:
    """Position of parabola ``N`` and real ellipse ``M`` from invariant signs.

    ``arithmetic`` is ``"exact"``, ``"float"`` or ``None`` (exact unless an
    entry is a float). ``paper_only`` drops the completion branch.
    """
    N, M, exact, tol = _prepare(N, M, arithmetic, tol)
    s, inv = _sign_data_general(N, M, exact, tol)
    v = decide(GENERAL_RULES, s, P, exact, paper_only)
    v.extra["invariants"] = inv
    return v


def canonical_sign_data(p: CanonicalParabolaCircle) -> dict:
    p.validate()
    f = p.cubic()
    a2 = _exact(p.aSq)
    g = shift(f, -a2)
    d2 = _exact(p.deltaSq)
    c = f.coeffs
    s = {
        "Delta": sign_exact(sum(disc_terms(*c))),
        "DeltaPrime": sign_exact(sum(disc_prime_terms(*c[:3]))),
        "c1": sign_exact(c[1]),
        "c2": sign_exact(c[2]),
        "c1P": sign_exact(g.c2),
        "c2P": sign_exact(g.c1),
        "c3P": sign_exact(g.c0),
        # a^2 against delta, compared through squares
        "AD": sign_exact(a2 * a2 - d2),
    }
    s["VarC"] = sign_variations((-sign_exact(g.c3), s["c1P"], -s["c2P"], s["c3P"]))
    return s


def classify_canonical(p: CanonicalParabolaCircle, paper_only: bool = False) -> Verdict:
    """Position of a canonical parabola and circle from coefficient signs."""
    s = canonical_sign_data(p)
    return decide(CANONICAL_RULES, s, P, True, paper_only)
