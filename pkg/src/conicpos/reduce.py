"""Affine reduction of a general pair to a canonical pair.

The ellipse becomes a circle and the other conic becomes
``x^2/a^2 - 2y = 0`` or ``x^2/a^2 - y^2/b^2 + 1 = 0``. Canonical parameters
are computed exactly from the pencil invariants:

* parabola path: ``a^2`` lies in Q(sqrt(-L0*T)), ``delta^2`` and ``xc^2`` are
  rational and ``yc`` shares the field of ``a^2``;
* hyperbola path: ``a^2``, ``b^2``, ``xc^2`` and ``yc^2`` lie in
  Q(sqrt(T^2 - 4*T1*T2)) and ``delta^2`` is rational.

The map itself involves nested square roots, so it is returned in floats
and is only meant for cross-checks and plotting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .classify_hyperbola import CanonicalHyperbolaCircle
from .classify_parabola import CanonicalParabolaCircle
from .conic import Conic, ConicClass, normalize
from .numeric import QuadExt
from .pencil import invariants


@dataclass(frozen=True)
class ReductionData:
    b0: QuadExt
    b2: QuadExt
    nu: Fraction
    E1: Optional[Fraction] = None
    E2: Optional[QuadExt] = None
    H0: Optional[QuadExt] = None
    H2: Optional[QuadExt] = None
    H5: Optional[Fraction] = None
    # new -> old coordinates, homogeneous column convention, floats
    transform: tuple = ()


def eigen_2x2(m11, m12, m22):
    """Eigenvalues ``b0 >= b2`` (exact, in Q(sqrt(nu))) and a float rotation.

    The rotation's first column is the ``b0`` eigenvector with its first
    nonzero component positive; the second column is that vector turned
    by +90 degrees. A scalar matrix gives the identity.
    """
    m11, m12, m22 = Fraction(m11), Fraction(m12), Fraction(m22)
    nu = (m11 - m22) ** 2 + 4 * m12 * m12
    tr = m11 + m22
    b0 = QuadExt(tr / 2, Fraction(1, 2), nu)
    b2 = QuadExt(tr / 2, Fraction(-1, 2), nu)
    if nu == 0:
        return b0, b2, ((1.0, 0.0), (0.0, 1.0))
    rot = _rotation(float(m11), float(m12), float(m22))
    return b0, b2, rot


def _rotation(m11, m12, m22):
    """Rotation whose first column spans the top eigenvector."""
    # angle of the principal axis
    th = 0.5 * math.atan2(2 * m12, m11 - m22)
    u = (math.cos(th), math.sin(th))
    if u[0] < 0 or (u[0] == 0 and u[1] < 0):
        u = (-u[0], -u[1])
    return ((u[0], -u[1]), (u[1], u[0]))


def _matmul(A, B):
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(3)) for j in range(3))
                 for i in range(3))


def _embed(R2, t=(0.0, 0.0)):
    return ((R2[0][0], R2[0][1], t[0]), (R2[1][0], R2[1][1], t[1]), (0.0, 0.0, 1.0))


def pull_back(c: Conic, S) -> tuple:
    """Float matrix of ``c`` in new coordinates: ``S^t M S``."""
    M = c.to_float().rows()
    MS = _matmul(M, S)
    St = tuple(tuple(S[j][i] for j in range(3)) for i in range(3))
    return _matmul(St, MS)


def _circle_frame(M: Conic):
    """Map sending a unit-quadratic-part frame to the ellipse's frame."""
    _, _, R = eigen_2x2(M.m11, M.m12, M.m22)
    R = R if R else ((1.0, 0.0), (0.0, 1.0))
    # eigenvalues in the order of R's columns
    Mf = M.to_float()
    cols = [(R[0][j], R[1][j]) for j in range(2)]
    lam = [Mf.m11 * u * u + 2 * Mf.m12 * u * v + Mf.m22 * v * v for u, v in cols]
    D = ((1 / math.sqrt(lam[0]), 0.0, 0.0), (0.0, 1 / math.sqrt(lam[1]), 0.0), (0.0, 0.0, 1.0))
    return _matmul(_embed(R), D)


def _second_frame(N2, S, parabola: bool):
    """Rotate and translate so the pulled-back conic is in canonical position."""
    a, b, d = N2[0][0], N2[0][1], N2[1][1]
    if parabola:
        # axis direction u: eigenvector of the nonzero eigenvalue
        th = 0.5 * math.atan2(2 * b, a - d)
        u = (math.cos(th), math.sin(th))
        if abs(a * u[0] ** 2 + 2 * b * u[0] * u[1] + d * u[1] ** 2) < 0.5 * abs(a + d):
            u = (-u[1], u[0])
    else:
        th = 0.5 * math.atan2(2 * b, a - d)
        u = (math.cos(th), math.sin(th))
        if a * u[0] ** 2 + 2 * b * u[0] * u[1] + d * u[1] ** 2 < 0:
            u = (-u[1], u[0])
    w = (-u[1], u[0])
    if parabola:
        # the linear coefficient along w must be negative so the curve opens to +y
        lin = N2[0][2] * w[0] + N2[1][2] * w[1]
        if lin > 0:
            w = (-w[0], -w[1])
    R = ((u[0], w[0], 0.0), (u[1], w[1], 0.0), (0.0, 0.0, 1.0))
    S = _matmul(S, R)
    N3 = _matmul(tuple(tuple(R[j][i] for j in range(3)) for i in range(3)), _matmul(N2, R))
    A, B, C = N3[0][0], N3[0][2], N3[1][2]
    if parabola:
        # A x^2 + 2B x + 2C y + F = 0, vertex where x = -B/A
        F = N3[2][2]
        x0 = -B / A
        y0 = -(F - B * B / A) / (2 * C)
    else:
        x0 = -B / A
        y0 = -C / N3[1][1]
    T = ((1.0, 0.0, x0), (0.0, 1.0, y0), (0.0, 0.0, 1.0))
    return _matmul(S, T)


def reduction_transform(N: Conic, M: Conic, parabola: bool):
    """Float map (new -> old) taking the pair to canonical position.

    After the map the ellipse is a circle and ``N`` is a multiple of the
    canonical parabola or hyperbola matrix.
    """
    S = _circle_frame(M)
    N2 = pull_back(N, S)
    return _second_frame(N2, S, parabola)


def _prepare(N, M, role):
    N = normalize(N, role)
    M = normalize(M, ConicClass.REAL_ELLIPSE)
    if not (N.is_exact and M.is_exact):
        raise ValueError("reduction needs rational coefficients")
    return N, M


def reduce_parabola_pair(N: Conic, M: Conic):
    """Canonical parabola-circle parameters of parabola ``N`` and ellipse ``M``."""
    N, M = _prepare(N, M, ConicClass.PARABOLA)
    inv = invariants(M, N)
    L0, L1, L2, L3, T1, T = (Fraction(x) for x in (inv.L0, inv.L1, inv.L2, inv.L3, inv.T1, inv.T))
    aSq = QuadExt(0, T1 / (T * T), -L0 * T)
    deltaSq = -L3 / T1
    yc = aSq * (L1 * T / (T1 * L0) - 1) / 2
    xc_sq = (L2 / T + 2 * aSq * yc + deltaSq).rational()
    E1 = T / T1
    b0, b2, _ = eigen_2x2(M.m11, M.m12, M.m22)
    data = ReductionData(
        b0=b0, b2=b2, nu=b0.d if b0.q else Fraction(0),
        E1=E1, E2=aSq * E1,
        transform=reduction_transform(N, M, parabola=True),
    )
    return CanonicalParabolaCircle(aSq, xc_sq, yc, deltaSq), data


def unit_scaled(p: CanonicalParabolaCircle) -> CanonicalParabolaCircle:
    """Rescale lengths by ``1/a^2``; a reduced pair then has rational entries."""
    a2 = p.aSq
    a4 = (a2 * a2)
    a4 = a4.rational() if isinstance(a4, QuadExt) else a4
    yc = p.yc / a2
    yc = yc.rational() if isinstance(yc, QuadExt) else yc
    xs = p.xc_sq.rational() if isinstance(p.xc_sq, QuadExt) else p.xc_sq
    ds = p.deltaSq.rational() if isinstance(p.deltaSq, QuadExt) else p.deltaSq
    return CanonicalParabolaCircle(Fraction(1), Fraction(xs) / a4, Fraction(yc),
                                   Fraction(ds) / a4)


def reduce_hyperbola_pair(Nh: Conic, M: Conic):
    """Canonical hyperbola-circle parameters of hyperbola ``Nh`` and ellipse ``M``."""
    Nh, M = _prepare(Nh, M, ConicClass.HYPERBOLA)
    inv = invariants(M, Nh)
    L0, L1, L2, L3, T1, T2, T = (Fraction(x) for x in
                                 (inv.L0, inv.L1, inv.L2, inv.L3, inv.T1, inv.T2, inv.T))
    D = T * T - 4 * T1 * T2
    H0 = QuadExt(T / (2 * T1), 1 / (2 * T1), D)
    H2 = QuadExt(T / (2 * T1), -1 / (2 * T1), D)
    H5 = L0 / T2
    aSq = H5 / H0
    bSq = -H5 / H2
    deltaSq = -L3 / T1
    ab = aSq * bSq
    S = L1 / T2 - aSq + bSq + deltaSq
    R = -L2 * L0 / (T2 * T2) - ab - aSq * deltaSq + bSq * deltaSq
    s = aSq + bSq
    xc_sq = (aSq * S + R) / s
    yc_sq = (bSq * S - R) / s
    b0, b2, _ = eigen_2x2(M.m11, M.m12, M.m22)
    data = ReductionData(
        b0=b0, b2=b2, nu=b0.d if b0.q else Fraction(0),
        H0=H0, H2=H2, H5=H5,
        transform=reduction_transform(Nh, M, parabola=False),
    )
    return CanonicalHyperbolaCircle(aSq, bSq, xc_sq, yc_sq, deltaSq), data
