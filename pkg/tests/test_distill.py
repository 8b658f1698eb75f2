import random
from fractions import Fraction as Q

import pytest

from gf4msd.distill import (
    EPS_MAX,
    Sqrt3,
    bernstein_certificate,
    build_map,
    check_success_nonneg,
    check_threshold_constraint,
    curve_rows,
    eval_sqrt3,
    natural_sign,
    noise_exponent,
    quantum_verdict,
    threshold,
)
from gf4msd.enumerators import Enumerator
from gf4msd.exact import poly_eval, poly_mul, poly_pow, poly_scale
from gf4msd.invariants import InvariantParams, expand_family

FIVE_A = Enumerator.from_pairs(5, {0: 1, 4: 15})

PUTATIVE_23 = Enumerator.from_pairs(
    23,
    {0: 1, 6: 90, 8: 1314, 10: 348, 12: 107280, 14: 434880, 16: 1282869,
     18: 1543428, 20: 738072, 22: 86022},
)
PUTATIVE_19 = Enumerator.from_pairs(
    19, {0: 1, 6: 36, 8: 1194, 10: 9108, 12: 53736, 14: 103404, 16: 80877, 18: 13788}
)
PUTATIVE_25 = Enumerator.from_pairs(
    25,
    {0: 1, 4: 39, 6: 1155, 8: 8679, 10: 8796, 12: 112482, 14: 487338,
     16: 2805963, 18: 5398860, 20: 5548959, 22: 2268459, 24: 136485},
)
FAKE_11 = Enumerator.from_pairs(11, {0: 1, 2: 11, 4: 138, 6: 22, 8: 645, 10: 207})


def test_sqrt3_arithmetic():
    a = Sqrt3(Q(1), Q(1))
    b = Sqrt3(Q(2), Q(-1))
    assert (a * b) == Sqrt3(Q(-1), Q(1))
    assert (a + b) == Sqrt3(Q(3), Q(0))
    assert Sqrt3(Q(-2), Q(1)).sign() == -1  # sqrt3 < 2
    assert Sqrt3(Q(-3, 2), Q(1)).sign() == 1  # sqrt3 > 3/2
    assert Sqrt3(Q(0), Q(0)).sign() == 0
    assert Sqrt3(Q(3), Q(-1)).sign() == 1
    assert Sqrt3(Q(-3), Q(1)).sign() == -1
    # eps_max = (1 - 1/sqrt3)/2: 6*eps_max - 3 = -sqrt3
    v = EPS_MAX * 6 - Sqrt3(Q(3), Q(0))
    assert v == Sqrt3(Q(0), Q(-1))


def test_five_qubit_map_exact():
    m = build_map(FIVE_A)
    num, den = m.canonical_fraction()
    assert num == (0, 0, 5, -15, 15, -4)
    assert den == (1, -5, 15, -20, 10)
    assert m.eps_out(Q(1, 2)) == Q(1, 2)
    ne = noise_exponent(m)
    assert ne.status == "ok" and ne.nu == 2 and ne.leading == 5


def test_sign_class_choice_is_pinned():
    # only lam = +1 (the natural class-5 choice) reproduces the known map
    wrong = build_map(FIVE_A, lam=-1)
    assert wrong.canonical_fraction() != build_map(FIVE_A).canonical_fraction()
    assert natural_sign(5) == 1 and natural_sign(7) == -1
    with pytest.raises(ValueError):
        natural_sign(9)


def test_map_matches_invariant_form():
    # cross-check M and N against the class-specific invariant expressions
    rng = random.Random(3)
    f = (0, 1, -1)  # eps (1 - eps)
    g = poly_mul(poly_pow((1, -2), 2), poly_pow((1, -1, 1), 2))
    for n in (11, 7, 13):
        from gf4msd.invariants import num_cprime, num_dprime

        cp = [Q(1)] + [Q(rng.randint(-20, 20)) for _ in range(num_cprime(n) - 1)]
        dp = [Q(rng.randint(-20, 20)) for _ in range(num_dprime(n))]
        A = expand_family(InvariantParams(n, cp, dp))
        dmap = build_map(A)
        # rescaled sums S1, S2 as polynomials in eps
        c = [Q(-16, 27) ** j * cp[j] * Q(4) ** ((n - 1) // 2 - 3 * j) for j in range(len(cp))]
        d = [Q(-16, 27) ** j * dp[j] * Q(4) ** ((n - 5) // 2 - 3 * j) for j in range(len(dp))]
        S1 = ()
        for j, cj in enumerate(c):
            term = poly_scale(poly_mul(poly_pow(f, (n - 1) // 2 - 3 * j), poly_pow(g, j)), cj)
            S1 = tuple(_add(S1, term))
        S2 = ()
        for j, dj in enumerate(d):
            term = poly_scale(poly_mul(poly_pow(f, (n - 5) // 2 - 3 * j), poly_pow(g, j)), dj)
            S2 = tuple(_add(S2, term))
        quart = (1, -1, 1)  # eps^2 - eps + 1
        w = poly_scale(poly_mul(poly_pow((1, -2), 2), quart), Q(4, 9))
        N_expect = _sub(S1, poly_mul(w, S2))
        assert tuple(N_expect) == dmap.n_poly
        if n % 6 == 5:
            M_expect = _sub(
                poly_mul((2, -2), S1),
                poly_mul(poly_scale(poly_mul(poly_mul((0, 0, 1), (-1, 2)), quart), Q(8, 9)), S2),
            )
        else:
            M_expect = _add(
                poly_mul((0, 2), S1),
                poly_mul(poly_scale(poly_mul(poly_mul(poly_pow((-1, 1), 2), (-1, 2)), quart), Q(8, 9)), S2),
            )
        assert tuple(M_expect) == dmap.m_poly


def _add(a, b):
    from gf4msd.exact import poly_add

    return poly_add(a, b)


def _sub(a, b):
    from gf4msd.exact import poly_sub

    return poly_sub(a, b)


def test_half_fixed_point_generic():
    rng = random.Random(9)
    for n in (5, 7, 11):
        from gf4msd.invariants import num_cprime, num_dprime

        cp = [Q(1)] + [Q(rng.randint(-9, 9)) for _ in range(num_cprime(n) - 1)]
        dp = [Q(rng.randint(-9, 9)) for _ in range(num_dprime(n))]
        A = expand_family(InvariantParams(n, cp, dp))
        m = build_map(A)
        if poly_eval(m.n_poly, Q(1, 2)) != 0:
            assert m.eps_out(Q(1, 2)) == Q(1, 2)


def test_threshold_five_qubit():
    rep = threshold(build_map(FIVE_A))
    assert rep.status == "ok" and rep.stable
    assert rep.high - rep.low <= Q(1, 10**12)
    # exact root of 7 e^2 - 7 e + 1 inside the bracket
    quad = (1, -7, 7)
    assert poly_eval(quad, rep.low) * poly_eval(quad, rep.high) < 0
    assert rep.decimal(6) == "0.172673"


def test_threshold_putative_23():
    rep = threshold(build_map(PUTATIVE_23))
    assert rep.status == "ok" and rep.stable
    assert rep.decimal(6) == "0.175343"


def test_identity_map_has_no_threshold():
    triv = expand_family(InvariantParams(7, (1, -3), (0,)))
    m = build_map(triv)
    assert m.eps_out(Q(1, 5)) == Q(1, 5)
    assert threshold(m).status == "identity"


def test_noise_exponents_putative():
    ne = noise_exponent(build_map(PUTATIVE_19))
    assert (ne.nu, ne.leading) == (4, 395)
    ne = noise_exponent(build_map(PUTATIVE_23))
    assert (ne.nu, ne.leading) == (5, 587)
    ne = noise_exponent(build_map(PUTATIVE_25))
    assert (ne.nu, ne.leading) == (7, Q(23591, 5))


def test_putative_large_rows():
    A35 = Enumerator.from_pairs(
        35,
        {0: 1, 12: 42840, 16: 6715170, 18: 46236960, 20: 339481296,
         22: 1334551680, 24: 3443179320, 26: 5213799360, 28: 4481873880,
         30: 1943770752, 32: 353253285, 34: 16964640},
    )
    m = build_map(A35)
    ne = noise_exponent(m)
    assert (ne.nu, ne.leading) == (5, Q(11781, 23))
    rep = threshold(m)
    assert rep.decimal(5) == "0.16331" and rep.stable
    assert quantum_verdict(A35).all_ok
    A31 = Enumerator.from_pairs(
        31,
        {0: 1, 6: 369, 8: 2898, 10: 4521, 12: 57951, 14: 466488,
         16: 6245181, 18: 36350466, 20: 139591494, 22: 293155569,
         24: 343995552, 26: 204720453, 28: 45717291, 30: 3433590},
    )
    ne = noise_exponent(build_map(A31))
    assert (ne.nu, ne.leading) == (7, 18569)
    assert threshold(build_map(A31)).decimal(6) == "0.174321"


def test_noise_exponent_useless():
    useless = expand_family(InvariantParams(5, (1,), (0,)))  # N(0) = 0
    ne = noise_exponent(build_map(useless))
    assert ne.status == "useless" and ne.nu is None


def test_quantum_verdicts():
    good = quantum_verdict(FIVE_A)
    assert good.all_ok
    fake = quantum_verdict(FAKE_11)
    assert not (fake.threshold_ok_plus and fake.threshold_ok_minus)
    assert fake.threshold_witness_minus is not None
    assert fake.threshold_witness_minus < 0
    for A in (PUTATIVE_19, PUTATIVE_23, PUTATIVE_25):
        assert quantum_verdict(A).all_ok


def test_success_nonneg_examples():
    ok, _ = check_success_nonneg(FIVE_A)
    assert ok
    corner = expand_family(InvariantParams(5, (1,), (9,)))
    ok, wit = check_success_nonneg(corner)
    assert not ok
    # witness is a rational eps with N < 0
    m = build_map(corner)
    assert poly_eval(m.n_poly, wit) < 0


def test_threshold_constraint_n7_ratio_form():
    # the class-1 map constraint at eps_max reduces to d0/(25 c1 + 15 d0 - 54) >= 0
    for c1, d0 in [(-3, -6), (0, -6), (-9, 0), (-3, 6), (6, 6), (-3, 12)]:
        A = expand_family(InvariantParams(7, (1, Q(c1)), (Q(d0),)))
        thr = check_threshold_constraint(A)
        denom = 25 * c1 + 15 * d0 - 54
        expect_plus = Q(d0, denom) >= 0 if denom else None
        if expect_plus is not None:
            assert thr[-1][0] == expect_plus, (c1, d0)
        expect_minus = Q(3 * (25 * c1 - 54), denom) >= 1 if denom else None
        if expect_minus is not None:
            assert thr[1][0] == expect_minus, (c1, d0)


def test_threshold_constraint_slack_is_rational():
    thr = check_threshold_constraint(FAKE_11)
    ok_minus, slack = thr[1]
    assert not ok_minus and slack == Q(-5152, 6561)


def test_eps_max_evaluation_in_field_extension():
    m = build_map(FIVE_A)
    val = eval_sqrt3(m.fixed_point_poly(), EPS_MAX)
    # pure sqrt(3) multiple, positive (threshold below eps_max)
    assert val.a == 0 and val.b > 0


def test_bernstein_certificates():
    assert bernstein_certificate((1,), 4) == [1] * 5
    m = build_map(FIVE_A)
    cert = bernstein_certificate(m.n_poly, 6)
    assert cert is not None and all(c >= 0 for c in cert)
    assert bernstein_certificate((Q(-1, 2), 1), 5) is None
    assert bernstein_certificate((Q(-1, 2), 1), 9) is None


def test_curve_rows():
    m = build_map(FIVE_A)
    rows = curve_rows(m, grid=8)
    assert len(rows) == 9
    assert rows[0] == (0, 0)
    assert rows[-1] == (Q(1, 2), Q(1, 2))


def test_build_map_rejects_bad_inputs():
    with pytest.raises(ValueError):
        build_map(Enumerator.from_pairs(9, {0: 1}))  # n = 3 mod 6
    with pytest.raises(ValueError):
        build_map(Enumerator.from_pairs(5, {0: 1, 1: 1, 4: 14}))
    with pytest.raises(ValueError):
        build_map(FIVE_A, lam=2)
