"""Small exact univariate polynomial toolkit over the rationals.

Polynomials are lists of coefficients in descending powers with a nonzero
leading entry (the zero polynomial is ``[]``). Only what the oracle needs:
division, gcd, square-free decomposition, Sturm counting and bisection.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def trim(p):
    i = 0
    while i < len(p) and p[i] == 0:
        i += 1
    return [Fraction(c) for c in p[i:]]


def degree(p) -> int:
    return len(p) - 1


def evaluate(p, x):
    acc = 0
    for c in p:
        acc = acc * x + c
    return acc


def derivative(p):
    n = len(p) - 1
    return trim([c * (n - i) for i, c in enumerate(p[:-1])])


def mul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def sub(p, q):
    n = max(len(p), len(q))
    p = [0] * (n - len(p)) + list(p)
    q = [0] * (n - len(q)) + list(q)
    return trim([a - b for a, b in zip(p, q)])


def divmod_(p, q):
    """Quotient and remainder of ``p / q``."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    p = list(p)
    out = []
    lead = q[0]
    while len(p) >= len(q):
        c = p[0] / lead
        out.append(c)
        for i in range(len(q)):
            p[i] -= c * q[i]
        p.pop(0)
    return trim(out) if out else [], trim(p)


def monic(p):
    return [c / p[0] for c in p] if p else []


def pgcd(p, q):
    p, q = trim(p), trim(q)
    while q:
        p, q = q, divmod_(p, q)[1]
    return monic(p)


def square_free_decomposition(p):
    """Yun's algorithm: list of ``(factor, multiplicity)`` with monic factors."""
    p = trim(p)
    if len(p) <= 1:
        return []
    out = []
    dp = derivative(p)
    a = pgcd(p, dp)
    b = divmod_(p, a)[0]
    c = divmod_(dp, a)[0]
    d = sub(c, derivative(b))
    i = 1
    while len(b) > 1:
        a = pgcd(b, d)
        if len(a) > 1:
            out.append((a, i))
        b = divmod_(b, a)[0]
        c = divmod_(d, a)[0]
        d = sub(c, derivative(b))
        i += 1
    return out


def sturm_sequence(p):
    seq = [trim(p), derivative(p)]
    while seq[-1]:
        r = divmod_(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append([-c for c in r])
    return [s for s in seq if s]


def sign_changes_at(seq, x) -> int:
    count, prev = 0, 0
    for s in seq:
        v = evaluate(s, x)
        if v == 0:
            continue
        v = 1 if v > 0 else -1
        if prev and v != prev:
            count += 1
        prev = v
    return count


def root_bound(p):
    """Power of two strictly above every |root| (Cauchy bound)."""
    lead = abs(p[0])
    m = max((abs(c) for c in p[1:]), default=0) / lead
    b = 1
    while b <= 1 + m:
        b *= 2
    return Fraction(b)


def isolate(p):
    """Disjoint isolating data for the real roots of a square-free ``p``.

    Returns sorted ``(lo, hi, exact)`` triples: ``exact`` is the rational
    root when bisection hit it, otherwise ``p`` has exactly one root in
    the open interval ``(lo, hi)`` and is nonzero at both ends.
    """
    p = trim(p)
    if len(p) <= 1:
        return []
    seq = sturm_sequence(p)
    B = root_bound(p)
    out = []
    # (lo, hi] intervals with their sign-change counts
    stack = [(-B, B, sign_changes_at(seq, -B), sign_changes_at(seq, B))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        n = vlo - vhi
        if n == 0:
            continue
        if n == 1:
            if evaluate(p, hi) == 0:
                out.append((hi, hi, hi))
                continue
            if evaluate(p, lo) != 0:
                out.append((lo, hi, None))
                continue
        mid = (lo + hi) / 2
        vm = sign_changes_at(seq, mid)
        stack.append((lo, mid, vlo, vm))
        stack.append((mid, hi, vm, vhi))
    return sorted(out, key=lambda t: t[0])


def refine(p, lo, hi, width):
    """Shrink an isolating interval of a simple root to below ``width``."""
    slo = evaluate(p, lo) > 0
    while hi - lo >= width:
        mid = (lo + hi) / 2
        v = evaluate(p, mid)
        if v == 0:
            return mid, mid
        if (v > 0) == slo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def integer_content_free(p):
    """Positive rational multiple of ``p`` with coprime integer coefficients."""
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [Fraction(c // g) for c in ints] if g else []
