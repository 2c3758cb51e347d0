"""Sign-decidable scalars.

Three kinds of numbers flow through the classifiers:

* exact rationals (``int`` or :class:`fractions.Fraction`),
* elements ``p + q*sqrt(d)`` of one quadratic extension (:class:`QuadExt`),
* tolerance-tagged floats (:class:`ApproxScalar`), whose sign may be
  :attr:`Sign.UNKNOWN` when the value is too small to trust.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from numbers import Rational

from .errors import NegativeRadicand, NotFinite

DEFAULT_TOL = 1e-10


class Sign(IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1
    UNKNOWN = 2

    @property
    def known(self) -> bool:
        return self is not Sign.UNKNOWN

    def __neg__(self):
        if self is Sign.UNKNOWN:
            return self
        return Sign(-int(self))

    def __mul__(self, other):
        if not isinstance(other, Sign):
            return NotImplemented
        if self is Sign.UNKNOWN or other is Sign.UNKNOWN:
            return Sign.UNKNOWN
        return Sign(int(self) * int(other))

    def __str__(self):
        return {-1: "-", 0: "0", 1: "+", 2: "?"}[int(self)]


_SIGNS = (Sign.ZERO, Sign.POSITIVE, Sign.NEGATIVE)  # indexed by (x > 0) - (x < 0)


def sign_rational(x) -> Sign:
    return _SIGNS[(x > 0) - (x < 0)]


def _rational_sqrt(x):
    """Exact square root of a nonnegative rational, or None if irrational."""
    x = Fraction(x)
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _lift(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class QuadExt:
    """The number ``p + q*sqrt(d)`` with rational ``p``, ``q`` and ``d >= 0``.

    Arithmetic is closed as long as both operands share the same ``d``
    (rationals mix freely). A perfect-square ``d`` is folded into ``p`` on
    construction, so ``q != 0`` always means a genuinely irrational value.
    """

    __slots__ = ("p", "q", "d")

    def __init__(self, p, q=0, d=0):
        if d < 0:
            raise NegativeRadicand(f"negative radicand {d}")
        if q:
            r = _rational_sqrt(d)
            if r is not None:
                p, q = p + q * r, 0
        self.p = _lift(p)
        self.q = _lift(q)
        self.d = _lift(d)

    @classmethod
    def _raw(cls, p, q, d):
        # operands already folded, so the radicand needs no recheck
        x = object.__new__(cls)
        x.p = p
        x.q = q
        x.d = d
        return x

    @classmethod
    def sqrt(cls, d):
        """``sqrt(d)`` as an element of Q(sqrt(d))."""
        return cls(0, 1, d)

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def rational(self):
        if self.q:
            raise ValueError(f"{self!r} is irrational")
        return self.p

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.q and self.q and other.d != self.d:
                raise ValueError(f"mixed radicands {self.d} and {other.d}")
            return other
        if isinstance(other, (int, Rational)):
            return QuadExt._raw(other, 0, self.d)
        return None

    def _d(self, o):
        return self.d if self.q else o.d

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt._raw(self.p + o.p, self.q + o.q, self._d(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadExt._raw(-self.p, -self.q, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt._raw(self.p - o.p, self.q - o.q, self._d(o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return QuadExt._raw(self.p * other, self.q * other, self.d)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._d(o)
        return QuadExt._raw(self.p * o.p + self.q * o.q * d, self.p * o.q + self.q * o.p, d)

    __rmul__ = __mul__

    def conjugate(self):
        return QuadExt._raw(self.p, -self.q, self.d)

    def norm(self):
        """``p**2 - q**2 * d``, the product with the conjugate."""
        return self.p * self.p - self.q * self.q * self.d

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return QuadExt._raw(Fraction(self.p) / other, Fraction(self.q) / other, self.d)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero")
        return (self * o.conjugate()) / n

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = QuadExt._raw(1, 0, self.d)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.p == o.p and self.q == o.q

    def __hash__(self):
        if not self.q:
            return hash(self.p)
        return hash((self.p, self.q, self.d))

    def _cmp(self, other):
        o = self._coerce(other)
        if o is None:
            return None
        return int(sign_quadext(self - o))

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c >= 0

    def __float__(self):
        return float(self.p) + float(self.q) * math.sqrt(float(self.d))

    def __repr__(self):
        if not self.q:
            return f"QuadExt({self.p})"
        return f"QuadExt({self.p}, {self.q}, {self.d})"

    def __str__(self):
        if not self.q:
            return str(self.p)
        return f"{self.p} + {self.q}*sqrt({self.d})"


def sign_quadext(x: QuadExt) -> Sign:
    """Exact sign of ``p + q*sqrt(d)``."""
    if x.d < 0:
        raise NegativeRadicand(f"negative radicand {x.d}")
    sp = (x.p > 0) - (x.p < 0)
    sq = (x.q > 0) - (x.q < 0) if x.d else 0
    if sq == 0:
        return _SIGNS[sp]
    if sp == 0 or sp == sq:
        return _SIGNS[sq]
    # opposite signs: |p| against |q|*sqrt(d)
    n = x.p * x.p - x.q * x.q * x.d
    return _SIGNS[sp * ((n > 0) - (n < 0))]


def sign_exact(x) -> Sign:
    if isinstance(x, QuadExt):
        return sign_quadext(x)
    return sign_rational(x)


def sign_sqrt_minus(a, b) -> Sign:
    """Sign of ``sqrt(a) - b`` for ``a``, ``b`` rational or in one Q(sqrt(d)).

    The outer root is never formed: a negative ``b`` makes the difference
    positive outright, otherwise both sides are nonnegative and the sign is
    that of ``a - b**2``.
    """
    sa = sign_exact(a)
    if sa is Sign.NEGATIVE:
        raise NegativeRadicand(f"sqrt of negative value {a}")
    sb = sign_exact(b)
    if sb is Sign.NEGATIVE:
        return Sign.POSITIVE
    return sign_exact(a - b * b)


@dataclass(frozen=True)
class ApproxScalar:
    value: float
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tol must be positive")


def sign_approx(x: ApproxScalar, scale: float = 1.0) -> Sign:
    """Float sign with a dead zone: never ZERO, UNKNOWN inside ``tol*scale``."""
    v = x.value
    if not math.isfinite(v):
        raise NotFinite(f"non-finite value {v}")
    if abs(v) <= x.tol * scale:
        return Sign.UNKNOWN
    return Sign.POSITIVE if v > 0 else Sign.NEGATIVE


def sign_float(value: float, mag: float, tol: float = DEFAULT_TOL) -> Sign:
    """Shortcut for ``sign_approx(ApproxScalar(value, tol), mag)``."""
    if not math.isfinite(value):
        raise NotFinite(f"non-finite value {value}")
    if abs(value) <= tol * mag:
        return Sign.UNKNOWN
    return Sign.POSITIVE if value > 0 else Sign.NEGATIVE


def float_signs(pairs: dict, tol: float) -> dict:
    """``sign_float`` over a ``{name: (value, magnitude)}`` mapping.

    Callers pass quantities of power-of-two scaled inputs, which cannot
    overflow; a NaN would still be caught here.
    """
    out = {}
    for name, (v, m) in pairs.items():
        t = tol * m
        if v > t:
            out[name] = Sign.POSITIVE
        elif v < -t:
            out[name] = Sign.NEGATIVE
        elif v != v:
            raise NotFinite(f"{name} is not a number")
        else:
            out[name] = Sign.UNKNOWN
    return out


def is_exact(x) -> bool:
    return isinstance(x, (int, Rational, QuadExt)) and not isinstance(x, bool)


def to_rational(x) -> Fraction:
    """Parse ``"p/q"``, a decimal string, an int or a Fraction into a Fraction."""
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        if not math.isfinite(x):
            raise NotFinite(f"non-finite value {x}")
        return Fraction(x)
    return Fraction(x)


def resolve_tol(tol=None) -> float:
    """Explicit tolerance, else the CONIC_TOL environment variable, else the default."""
    if tol is None:
        env = os.environ.get("CONIC_TOL")
        tol = float(env) if env else DEFAULT_TOL
    if not (tol > 0 and math.isfinite(tol)):
        raise ValueError(f"tolerance must be a positive finite number, got {tol}")
    return float(tol)
