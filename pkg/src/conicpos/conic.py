"""Conic representation, type detection and sign normalization.

A conic is the zero set of ``X M X^t`` with ``X = (x, y, 1)`` and ``M`` a
symmetric 3x3 matrix. Only the upper triangle is stored.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import AllZero, DegenerateInput, NotFinite, RoleMismatch
from .numeric import DEFAULT_TOL, Sign, sign_float, sign_rational, to_rational


class ConicClass(Enum):
    REAL_ELLIPSE = "RealEllipse"
    IMAGINARY_ELLIPSE = "ImaginaryEllipse"
    PARABOLA = "Parabola"
    HYPERBOLA = "Hyperbola"
    DEGENERATE = "Degenerate"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Conic:
    m11: object
    m12: object
    m13: object
    m22: object
    m23: object
    m33: object

    @property
    def entries(self) -> tuple:
        return (self.m11, self.m12, self.m13, self.m22, self.m23, self.m33)

    @property
    def is_exact(self) -> bool:
        return not any(isinstance(v, float) for v in self.entries)

    def rows(self):
        """The full symmetric matrix as a tuple of rows."""
        a, b, c, d, e, f = self.entries
        return ((a, b, c), (b, d, e), (c, e, f))

    def det(self):
        return sum(det_terms(self.entries))

    def minor(self):
        """Determinant of the leading 2x2 block."""
        return self.m11 * self.m22 - self.m12 * self.m12

    def __call__(self, x, y):
        a, b, c, d, e, f = self.entries
        return a * x * x + 2 * b * x * y + d * y * y + 2 * c * x + 2 * e * y + f

    def scaled(self, k) -> "Conic":
        return Conic(*(k * v for v in self.entries))

    def __neg__(self):
        return self.scaled(-1)

    def to_float(self) -> "Conic":
        return Conic(*(float(v) for v in self.entries))

    def to_equation(self) -> tuple:
        """Coefficients (A, B, C, D, E, F) of Ax^2+Bxy+Cy^2+Dx+Ey+F."""
        a, b, c, d, e, f = self.entries
        return (a, 2 * b, d, 2 * c, 2 * e, f)

    def center(self):
        """Center of a central conic (nonzero leading minor)."""
        a, b, c, d, e, _ = self.entries
        t = self.minor()
        if t == 0:
            raise ValueError("conic has no center")
        if self.is_exact:
            t = Fraction(t)
        return ((b * e - c * d) / t, (b * c - a * e) / t)

    def transformed(self, A) -> "Conic":
        """The conic in new coordinates ``X = X' A`` (rows of ``A`` are images).

        ``A`` is a 3x3 nested sequence; the new matrix is ``A M A^t``.
        """
        M = self.rows()
        AM = [[sum(A[i][k] * M[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
        R = [[sum(AM[i][k] * A[j][k] for k in range(3)) for j in range(3)] for i in range(3)]
        return Conic(R[0][0], R[0][1], R[0][2], R[1][1], R[1][2], R[2][2])


def det_terms(e):
    """Expansion terms of the determinant of a symmetric 3x3 matrix."""
    a, b, c, d, f_, g = e
    return (a * d * g, -a * f_ * f_, -b * b * g, 2 * b * c * f_, -c * c * d)


def _coerce_all(values):
    vals = [to_rational(v) if isinstance(v, str) else v for v in values]
    for v in vals:
        if isinstance(v, float) and not math.isfinite(v):
            raise NotFinite(f"non-finite coefficient {v}")
    if any(isinstance(v, float) for v in vals):
        return [float(v) for v in vals]
    return [Fraction(v) for v in vals]


def _tidy(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return v


def conic_from_equation(A, B, C, D, E, F) -> Conic:
    """Matrix of ``Ax^2 + Bxy + Cy^2 + Dx + Ey + F = 0``.

    Strings are parsed as rationals ("p/q" or decimals). A single float
    argument switches the whole conic to floats.
    """
    A, B, C, D, E, F = _coerce_all((A, B, C, D, E, F))
    if not any((A, B, C, D, E, F)):
        raise AllZero("all six coefficients are zero")
    if isinstance(A, float):
        return Conic(A, B / 2, D / 2, C, E / 2, F)
    return Conic(*(_tidy(v) for v in (A, B / 2, D / 2, C, E / 2, F)))


def _mag_det(c):
    return sum(map(abs, det_terms(tuple(map(abs, c.entries)))))


def _signs(c: Conic, tol):
    """Signs of (leading minor, det, trace of minor * det) and the det itself."""
    if c.is_exact:
        t1 = c.minor()
        det = c.det()
        return sign_rational(t1), sign_rational(det), sign_rational((c.m11 + c.m22) * det), det
    c = power2_scaled(c)
    a, b, _, d, _, _ = e = c.entries
    t1 = a * d - b * b
    terms = det_terms(e)
    det = sum(terms)
    s_t1 = sign_float(t1, abs(a * d) + b * b, tol)
    s_det = sign_float(det, sum(map(abs, terms)), tol)
    s_tr = sign_float(a + d, abs(a) + abs(d), tol)
    return s_t1, s_det, s_tr * s_det, det


def _kind(s_t1, s_det, s_trdet) -> ConicClass:
    if s_det is Sign.ZERO or s_det is Sign.UNKNOWN:
        return ConicClass.DEGENERATE
    if s_t1 is Sign.ZERO or s_t1 is Sign.UNKNOWN:
        return ConicClass.PARABOLA
    if s_t1 is Sign.NEGATIVE:
        return ConicClass.HYPERBOLA
    if s_trdet is Sign.NEGATIVE:
        return ConicClass.REAL_ELLIPSE
    return ConicClass.IMAGINARY_ELLIPSE


def classify_type(c: Conic, tol: float = DEFAULT_TOL) -> ConicClass:
    """Affine type of a conic.

    ``tol`` only matters for float entries. A leading minor too small to
    sign is read as zero (parabola); an unsignable determinant is read as
    degenerate.
    """
    return _kind(*_signs(c, tol)[:3])


def normalize(c: Conic, role: ConicClass, tol: float = DEFAULT_TOL) -> Conic:
    """Return ``c`` or ``-c`` so that the classifiers' sign conventions hold.

    Ellipses get ``m11 > 0`` (hence ``det < 0``); parabolas and hyperbolas
    get ``det < 0``.
    """
    s_t1, s_det, s_trdet, det = _signs(c, tol)
    kind = _kind(s_t1, s_det, s_trdet)
    if kind is not role or role in (ConicClass.DEGENERATE, ConicClass.IMAGINARY_ELLIPSE):
        if kind is ConicClass.DEGENERATE:
            raise DegenerateInput(f"expected {role}, got a degenerate conic")
        raise RoleMismatch(f"expected {role}, got {kind}")
    if role is ConicClass.REAL_ELLIPSE:
        flip = c.m11 < 0
    else:
        flip = det > 0
    return -c if flip else c


def float_normalized_entries(c: Conic, role: ConicClass, tol: float = DEFAULT_TOL) -> tuple:
    """Power-of-two scaled, sign-normalised float entries of ``c``.

    Same contract as ``normalize(power2_scaled(c), role, tol).entries`` without
    building intermediate objects; this is the float classifiers' hot path.
    """
    vals = [float(v) for v in c.entries]
    m = max(map(abs, vals))
    if m == 0:
        raise AllZero("all six coefficients are zero")
    if not math.isfinite(m):
        raise NotFinite("non-finite coefficient")
    k = math.ldexp(1.0, -math.frexp(m)[1])
    a, b, cc, d, e, f = vals = [v * k for v in vals]
    t1 = a * d - b * b
    det = a * (d * f - e * e) - b * (b * f - cc * e) + cc * (b * e - cc * d)
    A, B, C, D, E, F = map(abs, vals)
    s_t1 = sign_float(t1, A * D + B * B, tol)
    s_det = sign_float(det, A * D * F + A * E * E + B * B * F + 2 * B * C * E + C * C * D, tol)
    s_tr = sign_float(a + d, A + D, tol)
    kind = _kind(s_t1, s_det, s_tr * s_det)
    if kind is not role:
        if kind is ConicClass.DEGENERATE:
            raise DegenerateInput(f"expected {role}, got a degenerate conic")
        raise RoleMismatch(f"expected {role}, got {kind}")
    flip = a < 0 if role is ConicClass.REAL_ELLIPSE else det > 0
    return tuple(-v for v in vals) if flip else tuple(vals)


def integer_scaled(c: Conic) -> Conic:
    """Positive multiple of an exact conic with coprime integer entries."""
    vals = [Fraction(v) for v in c.entries]
    l = 1
    for v in vals:
        l = l * v.denominator // math.gcd(l, v.denominator)
    ints = [int(v * l) for v in vals]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g == 0:
        raise AllZero("all six coefficients are zero")
    return Conic(*(v // g for v in ints))


def power2_scaled(c: Conic) -> Conic:
    """Float copy scaled by a power of two so the largest entry is in [0.5, 1)."""
    vals = [float(v) for v in c.entries]
    m = max(map(abs, vals))
    if 0.5 <= m < 1.0 and all(type(v) is float for v in c.entries):
        return c
    if m == 0:
        raise AllZero("all six coefficients are zero")
    if not math.isfinite(m):
        raise NotFinite("non-finite coefficient")
    k = math.ldexp(1.0, -math.frexp(m)[1])
    # multiplying by a power of two is exact
    return Conic(*(v * k for v in vals))
