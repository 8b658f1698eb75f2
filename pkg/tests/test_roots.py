from fractions import Fraction as Q

import pytest

from gf4msd.exact import poly_eval, poly_mul
from gf4msd.roots import (
    bernstein_coefficients,
    count_roots,
    isolate_roots,
    poly_nonneg_on,
    refine_root,
    square_free,
)


def test_square_free_strips_multiplicity():
    p = poly_mul((1, -2), poly_mul((1, -2), (3, 1)))  # (x-... wait roots 1/2 double, -3
    h = square_free(p)
    assert poly_eval(h, Q(1, 2)) == 0
    assert poly_eval(h, -3) == 0
    # degree dropped by one
    assert len(h) == len(p) - 1


def test_count_and_isolate():
    # roots at 1/3, 1/2, 2
    p = poly_mul(poly_mul((-1, 3), (-1, 2)), (-2, 1))
    assert count_roots(p, 0, 1) == 2
    assert count_roots(p, 0, 3) == 3
    ivs = isolate_roots(p, 0, 3)
    assert len(ivs) == 3
    for (lo, hi), root in zip(ivs, (Q(1, 3), Q(1, 2), Q(2))):
        assert lo <= root <= hi
    lo, hi = refine_root(p, *ivs[0], width=Q(1, 10**12))
    assert hi - lo <= Q(1, 10**12)
    assert lo <= Q(1, 3) <= hi


def test_isolate_rejects_root_endpoint():
    with pytest.raises(ValueError):
        isolate_roots((0, 1), 0, 1)


def test_exact_root_hits():
    # refinement lands exactly on a rational root hit mid-bisection
    ivs = isolate_roots((-1, 2), 0, 1)
    assert len(ivs) == 1
    lo, hi = refine_root((-1, 2), *ivs[0], width=Q(1, 1000))
    assert lo == hi == Q(1, 2)
    # isolation around an exact midpoint root next to a second root
    p = poly_mul((-1, 3), (-1, 2))
    ivs = isolate_roots(p, 0, 1)
    assert (Q(1, 2), Q(1, 2)) in ivs and len(ivs) == 2


def test_nonneg_on_interval():
    ok, wit = poly_nonneg_on((1, 0, 15), 0, 1)
    assert ok and wit is None
    ok, wit = poly_nonneg_on((-1, 2), 0, 1)  # negative left of 1/2
    assert not ok and poly_eval((-1, 2), wit) < 0
    # touching zero is still nonnegative: (x - 1/2)^2
    ok, _ = poly_nonneg_on(poly_mul((-1, 2), (-1, 2)), 0, 1)
    assert ok
    # tiny interior dip
    p = poly_mul((-1, 3), (-1, 2))  # roots 1/3, 1/2; negative between
    ok, wit = poly_nonneg_on(p, 0, 1)
    assert not ok and Q(1, 3) < wit < Q(1, 2)
    # zero polynomial
    assert poly_nonneg_on((), 0, 1) == (True, None)


def test_bernstein_basics():
    assert bernstein_coefficients((1,), 4) == [1] * 5
    # eps - 1/2 changes sign: endpoint coefficients are p(0), p(1)
    coeffs = bernstein_coefficients((Q(-1, 2), 1), 3)
    assert coeffs[0] == Q(-1, 2) and coeffs[-1] == Q(1, 2)
    with pytest.raises(ValueError):
        bernstein_coefficients((1, 2, 3), 1)
