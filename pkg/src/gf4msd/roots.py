"""Exact real-root analysis for rational polynomials.

Sturm chains, root isolation by bisection, interval refinement, and
sign-constancy decisions on closed intervals.  Everything is exact; no
floating point enters any verdict.
"""

from __future__ import annotations

from .exact import (
    Q,
    poly,
    poly_degree,
    poly_deriv,
    poly_divmod,
    poly_eval,
    poly_gcd,
    poly_neg,
    poly_scale,
)


def square_free(p) -> tuple:
    """Square-free part of p (monic)."""
    p = poly(Q(a) for a in p)
    if poly_degree(p) < 1:
        return p
    g = poly_gcd(p, poly_deriv(p))
    if poly_degree(g) < 1:
        return poly_scale(p, Q(1) / p[-1])
    q_, r = poly_divmod(p, g)
    assert not r
    return poly_scale(q_, Q(1) / q_[-1])


def sturm_chain(p) -> list:
    chain = [poly(Q(a) for a in p)]
    d = poly_deriv(chain[0])
    if d:
        chain.append(d)
    while poly_degree(chain[-1]) > 0:
        r = poly_divmod(chain[-2], chain[-1])[1]
        if not r:
            break
        chain.append(poly_neg(r))
    return chain


def _variations(chain, x) -> int:
    signs = []
    for f in chain:
        v = poly_eval(f, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    count = 0
    for a, b in zip(signs, signs[1:]):
        if a != b:
            count += 1
    return count


def count_roots(p, a, b) -> int:
    """Distinct real roots of p in the half-open interval (a, b].

    Requires p(a) != 0.
    """
    p = square_free(p)
    if not p:
        raise ValueError("zero polynomial has no isolated roots")
    if poly_eval(p, a) == 0:
        raise ValueError("left endpoint is a root")
    chain = sturm_chain(p)
    return _variations(chain, a) - _variations(chain, b)


def isolate_roots(p, a, b) -> list:
    """Disjoint rational intervals each holding one distinct root of p in (a, b].

    Returns (lo, hi) pairs with lo == hi for roots hit exactly.  Interval
    endpoints that are not exact roots have p != 0.  Requires p(a) != 0.
    """
    h = square_free(p)
    if not h:
        raise ValueError("zero polynomial")
    if poly_eval(h, a) == 0:
        raise ValueError("left endpoint is a root")
    chain = sturm_chain(h)

    out = []

    def recurse(lo, hi, nroots):
        if nroots == 0:
            return
        if nroots == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        if poly_eval(h, mid) == 0:
            # shrink a margin around the exact root until it holds no other
            eps = (hi - lo) / 4
            while True:
                left_hi, right_lo = mid - eps, mid + eps
                while poly_eval(h, left_hi) == 0:
                    left_hi = (left_hi + mid) / 2
                while poly_eval(h, right_lo) == 0:
                    right_lo = (mid + right_lo) / 2
                if _variations(chain, left_hi) - _variations(chain, right_lo) == 1:
                    break
                eps = eps / 2
            nl = _variations(chain, lo) - _variations(chain, left_hi)
            recurse(lo, left_hi, nl)
            out.append((mid, mid))
            nr = _variations(chain, right_lo) - _variations(chain, hi)
            recurse(right_lo, hi, nr)
            return
        lo_n = _variations(chain, lo) - _variations(chain, mid)
        recurse(lo, mid, lo_n)
        recurse(mid, hi, nroots - lo_n)

    total = _variations(chain, a) - _variations(chain, b)
    recurse(Q(a), Q(b), total)
    out.sort()
    return out


def refine_root(p, lo, hi, width) -> tuple:
    """Shrink an isolating interval by bisection to the requested width."""
    h = square_free(p)
    lo, hi = Q(lo), Q(hi)
    if lo == hi:
        return lo, hi
    flo = poly_eval(h, lo)
    if flo == 0:
        return lo, lo
    if poly_eval(h, hi) == 0:
        # nudge the right endpoint inward until the sign change is exposed
        chain = sturm_chain(h)
        while True:
            mid = (lo + hi) / 2
            if poly_eval(h, mid) == 0:
                return mid, mid
            if _variations(chain, lo) - _variations(chain, mid) == 1:
                hi = mid
                break
            lo = mid
    while hi - lo > width:
        mid = (lo + hi) / 2
        fm = poly_eval(h, mid)
        if fm == 0:
            return mid, mid
        if (flo > 0) != (fm > 0):
            hi = mid
        else:
            lo, flo = mid, fm
    return lo, hi


def poly_nonneg_on(p, a, b):
    """Decide p(x) >= 0 for all x in [a, b] exactly.

    Returns (True, None) or (False, witness) with a rational witness where
    p(witness) < 0.
    """
    p = poly(Q(c) for c in p)
    a, b = Q(a), Q(b)
    if not p:
        return True, None
    va, vb = poly_eval(p, a), poly_eval(p, b)
    if va < 0:
        return False, a
    if vb < 0:
        return False, b
    h = square_free(p)
    # sample one point inside every root-free stretch of [a, b]
    lo = a
    while poly_eval(h, lo) == 0:
        lo = lo + (b - lo) / 2**20
        if lo >= b:
            return True, None
    if poly_eval(p, lo) < 0:
        return False, lo
    intervals = isolate_roots(h, lo, b)
    samples = [lo, b]
    prev_hi = lo
    for ilo, ihi in intervals:
        samples.append(ilo)
        samples.append(ihi)
        samples.append(prev_hi + (ilo - prev_hi) / 2)
        prev_hi = ihi
    samples.append(prev_hi + (b - prev_hi) / 2)
    for s in samples:
        if a <= s <= b and poly_eval(p, s) < 0:
            return False, s
    return True, None


def bernstein_coefficients(p, degree: int) -> list:
    """Coefficients of p in the Bernstein basis of the given degree on [0, 1]."""
    from math import comb

    if poly_degree(p) > degree:
        raise ValueError("degree too small for polynomial")
    out = []
    for j in range(degree + 1):
        s = Q(0)
        for k in range(min(j, len(p) - 1) + 1 if p else 0):
            if p[k]:
                s += Q(comb(j, k), comb(degree, k)) * p[k]
        out.append(s)
    return out
