from fractions import Fraction as Q

import pytest

from gf4msd.enumerators import Enumerator, signed_eval
from gf4msd.invariants import (
    InvariantParams,
    SelfDualParams,
    expand_family,
    expand_selfdual,
    extremal_A2,
    extremal_distillation_enumerator,
    extremal_distillation_params,
    h_series,
    params_from_enumerator,
    selfdual_extremal_enumerator,
    selfdual_extremal_params,
)

# frozen classification values for the extremal distillation family
EXTREMAL_ROWS = {
    5: {0: 1, 2: -30, 4: 45},
    7: {0: 1, 2: -63, 4: 315, 6: -189},
    11: {0: 1, 2: -165, 4: 2970, 6: -12474, 8: 13365, 10: -2673},
    13: {0: 1, 2: -234, 4: 6435, 6: -46332, 8: 104247, 10: -69498, 12: 9477},
    17: {0: 1, 2: -408, 4: 21420, 6: -334152, 8: 1969110, 10: -4725864,
         12: 4511052, 14: -1487160, 16: 111537},
    19: {0: 1, 2: -513, 4: 34884, 6: -732564, 8: 6122142, 10: -22447854,
         12: 36732852, 14: -25430436, 16: 6357609, 18: -373977},
}

SELFDUAL_PURE_EVALS = {
    12: Q(-256, 81),
    24: Q(-1245184, 19683),
    36: Q(-12146704384, 14348907),
    48: Q(-121921236631552, 10460353203),
    60: Q(-1264863882942349312, 7625597484987),
    72: Q(-4471893160093900865536, 1853020188851841),
    84: Q(-433405775278763760286695424, 12157665459056928801),
    96: Q(-1572944082477201192612565876736, 2954312706550833698643),
}


def test_expand_family_five_qubit():
    A = expand_family(InvariantParams(5, (1,), (-6,)))
    assert A.coeffs == (1, 0, 0, 0, 15, 0)
    A = expand_family(InvariantParams(5, (1,), (-36,)))
    assert A.coeffs == (1, 0, -30, 0, 45, 0)


def test_expand_family_general_term():
    # with only c0' = 1 the degree-2 coefficient is 9 at n=7
    A = expand_family(InvariantParams(7, (1, 0), (0,)))
    assert A.coeffs[2] == 9
    B = expand_family(InvariantParams(7, (1, 1), (1,)))
    assert B.coeffs[2] == 9 + 1 + 1  # c1' + d0' + 9


def test_expand_selfdual_hexacode():
    A = expand_selfdual(SelfDualParams(6, (1, -9)))
    assert A.coeffs == (1, 0, 0, 0, 45, 0, 18)
    # trivial choice: (x^2 + 3y^2)^(n/2)
    A = expand_selfdual(SelfDualParams(8, (1, 0)))
    assert A.coeffs == (1, 0, 12, 0, 54, 0, 108, 0, 81)


def test_h_series():
    hs = h_series(8)
    assert hs.coeffs == (1, -1, 2, -5, 14, -42, 132, -429, 1430)
    assert h_series(0).coeffs == (1,)
    # closed form (-4)^j (1/2)_j / (2)_j
    for j, h in enumerate(hs.coeffs):
        poch_half = Q(1)
        poch_two = Q(1)
        for i in range(j):
            poch_half *= Q(1, 2) + i
            poch_two *= 2 + i
        assert h == Q(-4) ** j * poch_half / poch_two
    with pytest.raises(ValueError):
        h_series(-1)


def test_extremal_distillation_rows():
    for n, row in EXTREMAL_ROWS.items():
        A = extremal_distillation_enumerator(n)
        assert A == Enumerator.from_pairs(n, row), n
        assert A.coeffs[2] == extremal_A2(n)
        assert A.coeffs[2] < 0


def test_extremal_a2_closed_form():
    assert extremal_A2(5) == -30
    assert extremal_A2(7) == -63
    assert extremal_A2(13) == -234
    with pytest.raises(ValueError):
        extremal_A2(9)


def test_extremal_divisibility_small_n():
    # observed for n < 20: all nonzero coefficients divisible by 3 past A_0
    for n in (5, 7, 11, 13, 17, 19):
        A = extremal_distillation_enumerator(n)
        assert all(c % 3 == 0 for c in A.coeffs[1:])


def test_selfdual_extremal_params():
    p12 = selfdual_extremal_params(12)
    assert p12.c == (1, -18, -9)
    A12 = expand_selfdual(p12)
    assert A12 == Enumerator.from_pairs(12, {0: 1, 6: 396, 8: 1485, 10: 1980, 12: 234})
    p6 = selfdual_extremal_params(6)
    assert p6.c == (1, -9)


def test_selfdual_negativity_sweep():
    for n, expected in SELFDUAL_PURE_EVALS.items():
        A = selfdual_extremal_enumerator(n)
        val = signed_eval(A, Q(1, 3))
        assert val == expected
        assert val < 0
        # closed-form shortcut: (-16/27)^(2m) c_(2m)
        m = n // 12
        c = selfdual_extremal_params(n).c
        assert val == Q(-16, 27) ** (2 * m) * c[2 * m]


def test_params_roundtrip():
    for n, cp, dp in [
        (5, (1,), (-6,)),
        (7, (1, Q(-3)), (Q(1, 2),)),
        (11, (1, Q(2, 3)), (-6, Q(7, 5))),
        (13, (1, -12, 4), (-6, 9)),
    ]:
        p = InvariantParams(n, cp, dp)
        q = params_from_enumerator(expand_family(p))
        assert q == p


def test_params_from_enumerator_rejects_outside_span():
    bad = Enumerator.from_pairs(5, {0: 1, 1: 1})
    with pytest.raises(ValueError):
        params_from_enumerator(bad)


def test_extremal_params_match_known_rescale():
    # the n=5 extremal comes from d0' = -36; the realized 5-qubit code from -6
    p = extremal_distillation_params(5)
    assert p.dprime == (Q(-36),)
    five = params_from_enumerator(Enumerator.from_pairs(5, {0: 1, 4: 15}))
    assert five.cprime == (1,) and five.dprime == (-6,)


def test_family_macwilliams_structure():
    # B - A has only odd powers across random rational parameters
    import random

    rng = random.Random(5)
    for _ in range(20):
        n = rng.choice([5, 7, 11, 13])
        from gf4msd.invariants import num_cprime, num_dprime

        cp = [Q(1)] + [Q(rng.randint(-40, 40), rng.randint(1, 5)) for _ in range(num_cprime(n) - 1)]
        dp = [Q(rng.randint(-40, 40), rng.randint(1, 5)) for _ in range(num_dprime(n))]
        A = expand_family(InvariantParams(n, cp, dp))
        assert A.is_even_only()
        assert A.total() == 2 ** (n - 1)
        from gf4msd.enumerators import transform_xy

        B = transform_xy(A).scale(Q(1, 2 ** (n - 1)))
        C = B - A
        assert C.is_odd_only()


def test_invariant_transform_covariance():
    # fhat and ghat pick up factors 4 and 64 under (x, y) -> (x+3y, x-y),
    # checked on expanded products up to degree 19
    from gf4msd.enumerators import transform_xy
    from gf4msd.invariants import _fg_power

    for fpow, gpow in [(1, 0), (0, 1), (3, 1), (2, 2), (5, 1), (0, 3)]:
        deg = 2 * fpow + 6 * gpow
        if deg > 19:
            continue
        block = _fg_power(fpow, gpow)
        E = Enumerator(deg, tuple(block) + (0,) * (deg + 1 - len(block)))
        T = transform_xy(E)
        scale = 4**fpow * 64**gpow
        assert T.coeffs == tuple(scale * c for c in E.coeffs)
