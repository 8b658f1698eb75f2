from fractions import Fraction as Q

from gf4msd import simplex


def certify(c, a_ub, b_ub, a_eq, b_eq):
    res = simplex.solve(c, a_ub, b_ub, a_eq, b_eq)
    assert res.status == simplex.OPTIMAL
    assert simplex.certify_optimum(c, a_ub, b_ub, a_eq, b_eq, res)
    return res


def test_bounded_minimum_with_dual():
    res = certify([-1], [[1]], [3], [], [])
    assert res.x == (3,) and res.objective == -3
    assert res.dual_ub == (1,)


def test_two_variable_corner():
    res = certify([1, 1], [[-1, 0], [0, -1]], [-1, -2], [], [])
    assert res.x == (1, 2) and res.objective == 3


def test_equality_mix():
    res = certify([1, 0], [[0, 1]], [3], [[1, 1]], [5])
    assert res.x == (2, 3) and res.objective == 2


def test_redundant_equalities():
    res = certify([1], [], [], [[1], [1]], [2, 2])
    assert res.x == (2,)


def test_infeasible():
    res = simplex.solve([0], [[-1], [1]], [-1, 0], [], [])
    assert res.status == simplex.INFEASIBLE


def test_unbounded_with_ray():
    res = simplex.solve([-1], [[-1]], [0], [], [])
    assert res.status == simplex.UNBOUNDED
    # the ray improves the objective while staying feasible
    d = res.ray[0]
    assert d > 0


def test_fractional_data():
    res = certify([Q(2, 3)], [[-1]], [Q(-1, 7)], [], [])
    assert res.x == (Q(1, 7),)
    assert res.objective == Q(2, 21)


def test_degenerate_objective_zero():
    res = certify([0, 0], [[1, 1], [-1, -1]], [1, 1], [], [])
    assert res.objective == 0


def test_duality_audit_random_instances():
    import random

    rng = random.Random(17)
    for _ in range(25):
        nv = rng.randint(1, 4)
        nc = rng.randint(1, 5)
        a_ub = [[Q(rng.randint(-4, 4)) for _ in range(nv)] for _ in range(nc)]
        b_ub = [Q(rng.randint(0, 8)) for _ in range(nc)]
        # box to keep things bounded
        for i in range(nv):
            row = [Q(0)] * nv
            row[i] = Q(1)
            a_ub.append(row)
            b_ub.append(Q(10))
            a_ub.append([-v for v in row])
            b_ub.append(Q(10))
        c = [Q(rng.randint(-3, 3)) for _ in range(nv)]
        res = simplex.solve(c, a_ub, b_ub, [], [])
        assert res.status == simplex.OPTIMAL
        assert simplex.certify_optimum(c, a_ub, b_ub, [], [], res)
