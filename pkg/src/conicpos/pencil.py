"""Characteristic cubic of a conic pair and the invariants built from it.

For ellipse ``M`` and second conic ``N`` the pencil cubic is

    F(l) = det(l*N + M) = L0*l^3 + L1*l^2 + L2*l + L3.

Every quantity below is written as a function returning the tuple of its
expansion terms. Summing the terms gives the value; summing the absolute
terms evaluated on absolute inputs gives a magnitude that float mode uses
as the scale of its zero test.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .conic import Conic, det_terms
from .errors import LeadingZero
from .numeric import Sign


@dataclass(frozen=True)
class Cubic:
    c3: object
    c2: object
    c1: object
    c0: object

    @property
    def coeffs(self) -> tuple:
        """Coefficients in descending powers."""
        return (self.c3, self.c2, self.c1, self.c0)

    def __call__(self, x):
        return ((self.c3 * x + self.c2) * x + self.c1) * x + self.c0

    def derivative(self) -> tuple:
        return (3 * self.c3, 2 * self.c2, self.c1)

    def scaled(self, k) -> "Cubic":
        return Cubic(*(k * c for c in self.coeffs))


def adj_trace_terms(n, m):
    """Terms of trace(adj(N) * M) for symmetric N, M given by six entries."""
    a, b, c, d, e, f = n
    m11, m12, m13, m22, m23, m33 = m
    return (
        d * f * m11, -e * e * m11,
        a * f * m22, -c * c * m22,
        a * d * m33, -b * b * m33,
        2 * c * e * m12, -2 * b * f * m12,
        2 * b * e * m13, -2 * c * d * m13,
        2 * b * c * m23, -2 * a * e * m23,
    )


def minor_terms(m):
    return (m[0] * m[3], -m[1] * m[1])


def cross_minor_terms(m, n):
    """Terms of T = trace(adj(M2) * N2)."""
    return (m[3] * n[0], m[0] * n[3], -2 * m[1] * n[1])


def disc_terms(c3, c2, c1, c0):
    """Terms of the cubic discriminant."""
    return (
        -27 * c0 * c0 * c3 * c3,
        18 * c0 * c1 * c2 * c3,
        -4 * c0 * c2 * c2 * c2,
        -4 * c1 * c1 * c1 * c3,
        c1 * c1 * c2 * c2,
    )


def disc_prime_terms(c3, c2, c1):
    """Terms of the discriminant of the derivative (up to a factor 3)."""
    return (-12 * c3 * c1, 4 * c2 * c2)


def tracked(terms_fn, values, mags=None):
    """Evaluate a terms function; returns ``(value, magnitude)``.

    Without ``mags`` the magnitude is ``None`` (exact mode).
    """
    v = sum(terms_fn(*values))
    if mags is None:
        return v, None
    return v, sum(map(abs, terms_fn(*mags)))


def char_poly(M: Conic, N: Conic) -> Cubic:
    """Coefficients of det(l*N + M) via adjugate traces (no division)."""
    m, n = M.entries, N.entries
    return Cubic(
        sum(det_terms(n)),
        sum(adj_trace_terms(n, m)),
        sum(adj_trace_terms(m, n)),
        sum(det_terms(m)),
    )


@dataclass(frozen=True)
class PencilInvariants:
    L0: object
    L1: object
    L2: object
    L3: object
    T1: object
    T2: object
    T: object
    Delta: object
    DeltaPrime: object
    # magnitudes of the same quantities; float mode only
    mags: Optional[dict] = field(default=None, compare=False)

    @property
    def cubic(self) -> Cubic:
        return Cubic(self.L0, self.L1, self.L2, self.L3)

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in
                ("L0", "L1", "L2", "L3", "T1", "T2", "T", "Delta", "DeltaPrime")}


def invariants(M: Conic, N: Conic, track: bool = False) -> PencilInvariants:
    """All pencil invariants of the pair (ellipse ``M``, conic ``N``).

    With ``track=True`` (float inputs) the record also carries magnitudes.
    """
    m, n = M.entries, N.entries
    am = tuple(map(abs, m)) if track else None
    an = tuple(map(abs, n)) if track else None
    out, mags = {}, {}

    def put(name, fn, vals, mvals):
        out[name], mags[name] = tracked(fn, vals, mvals)

    put("L0", det_terms, (n,), (an,) if track else None)
    put("L1", adj_trace_terms, (n, m), (an, am) if track else None)
    put("L2", adj_trace_terms, (m, n), (am, an) if track else None)
    put("L3", det_terms, (m,), (am,) if track else None)
    put("T1", minor_terms, (m,), (am,) if track else None)
    put("T2", minor_terms, (n,), (an,) if track else None)
    put("T", cross_minor_terms, (m, n), (am, an) if track else None)
    L = (out["L0"], out["L1"], out["L2"], out["L3"])
    LM = tuple(mags[k] for k in ("L0", "L1", "L2", "L3")) if track else None
    put("Delta", disc_terms, L, LM)
    put("DeltaPrime", disc_prime_terms, L[:3], LM[:3] if track else None)
    return PencilInvariants(**out, mags=mags if track else None)


def invariants_float(m: tuple, n: tuple) -> PencilInvariants:
    """Float invariants with magnitudes, written out for speed.

    Agrees with ``invariants(M, N, track=True)`` up to rounding; each
    magnitude is the sum of absolute expansion terms, as there.
    """
    m11, m12, m13, m22, m23, m33 = m
    n11, n12, n13, n22, n23, n33 = n
    M11, M12, M13, M22, M23, M33 = map(abs, m)
    N11, N12, N13, N22, N23, N33 = map(abs, n)
    L0 = n11 * (n22 * n33 - n23 * n23) - n12 * (n12 * n33 - n13 * n23) + n13 * (n12 * n23 - n13 * n22)
    mL0 = N11 * (N22 * N33 + N23 * N23) + N12 * (N12 * N33 + 2 * N13 * N23) + N13 * N13 * N22
    L3 = m11 * (m22 * m33 - m23 * m23) - m12 * (m12 * m33 - m13 * m23) + m13 * (m12 * m23 - m13 * m22)
    mL3 = M11 * (M22 * M33 + M23 * M23) + M12 * (M12 * M33 + 2 * M13 * M23) + M13 * M13 * M22
    L1 = (m11 * (n22 * n33 - n23 * n23) + m22 * (n11 * n33 - n13 * n13) + m33 * (n11 * n22 - n12 * n12)
          + 2 * (m12 * (n13 * n23 - n12 * n33) + m13 * (n12 * n23 - n13 * n22)
                 + m23 * (n12 * n13 - n11 * n23)))
    mL1 = (M11 * (N22 * N33 + N23 * N23) + M22 * (N11 * N33 + N13 * N13) + M33 * (N11 * N22 + N12 * N12)
           + 2 * (M12 * (N13 * N23 + N12 * N33) + M13 * (N12 * N23 + N13 * N22)
                  + M23 * (N12 * N13 + N11 * N23)))
    L2 = (n11 * (m22 * m33 - m23 * m23) + n22 * (m11 * m33 - m13 * m13) + n33 * (m11 * m22 - m12 * m12)
          + 2 * (n12 * (m13 * m23 - m12 * m33) + n13 * (m12 * m23 - m13 * m22)
                 + n23 * (m12 * m13 - m11 * m23)))
    mL2 = (N11 * (M22 * M33 + M23 * M23) + N22 * (M11 * M33 + M13 * M13) + N33 * (M11 * M22 + M12 * M12)
           + 2 * (N12 * (M13 * M23 + M12 * M33) + N13 * (M12 * M23 + M13 * M22)
                  + N23 * (M12 * M13 + M11 * M23)))
    T1 = m11 * m22 - m12 * m12
    mT1 = M11 * M22 + M12 * M12
    T2 = n11 * n22 - n12 * n12
    mT2 = N11 * N22 + N12 * N12
    T = m22 * n11 + m11 * n22 - 2 * m12 * n12
    mT = M22 * N11 + M11 * N22 + 2 * M12 * N12
    Delta = sum(disc_terms(L0, L1, L2, L3))
    mDelta = (27 * mL3 * mL3 * mL0 * mL0 + 18 * mL3 * mL2 * mL1 * mL0 + 4 * mL3 * mL1 ** 3
              + 4 * mL2 ** 3 * mL0 + mL2 * mL2 * mL1 * mL1)
    DeltaPrime = 4 * L1 * L1 - 12 * L0 * L2
    mDeltaPrime = 4 * mL1 * mL1 + 12 * mL0 * mL2
    mags = {"L0": mL0, "L1": mL1, "L2": mL2, "L3": mL3, "T1": mT1, "T2": mT2, "T": mT,
            "Delta": mDelta, "DeltaPrime": mDeltaPrime}
    return PencilInvariants(L0, L1, L2, L3, T1, T2, T, Delta, DeltaPrime, mags)


def discriminant(f: Cubic):
    if f.c3 == 0:
        raise LeadingZero("cubic has zero leading coefficient")
    return sum(disc_terms(*f.coeffs))


def discriminant_prime(f: Cubic):
    if f.c3 == 0:
        raise LeadingZero("cubic has zero leading coefficient")
    return sum(disc_prime_terms(*f.coeffs[:3]))


def shift(f: Cubic, h) -> Cubic:
    """Coefficients of ``f(l + h)``; roots move by ``-h``."""
    c3, c2, c1, c0 = f.coeffs
    return Cubic(
        c3,
        3 * c3 * h + c2,
        (3 * c3 * h + 2 * c2) * h + c1,
        f(h),
    )


def sign_variations(seq) -> Optional[int]:
    """Sign changes in a sequence of signs, zeros dropped.

    Returns ``None`` when any entry is :attr:`Sign.UNKNOWN`.
    """
    prev = 0
    count = 0
    for s in seq:
        if s is Sign.UNKNOWN:
            return None
        s = int(s)
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count
