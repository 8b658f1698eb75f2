"""Exact rational linear programming.

Two-phase simplex over Fractions with Bland's anti-cycling rule.  Problems
are stated over free variables with <= and == rows; internally variables
split into nonnegative pairs and slacks/artificials are added.  Optima
carry exact dual multipliers certifiable by `certify_optimum`:

    primal   min c.x   s.t.  G x <= h,  E x = f
    dual     max -h.lam - f.mu   s.t.  c + G^T lam + E^T mu = 0,  lam >= 0
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import Q

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"
OPTIMAL = "optimal"


@dataclass
class LpResult:
    status: str
    x: tuple | None = None
    objective: Fraction | None = None
    dual_ub: tuple | None = None  # lam >= 0, one per <= row
    dual_eq: tuple | None = None  # mu, one per == row
    ray: tuple | None = None


def _pivot(tab, basis, row, col):
    piv = tab[row][col]
    tab[row] = [v / piv for v in tab[row]]
    for r in range(len(tab)):
        if r != row and tab[r][col] != 0:
            f = tab[r][col]
            tab[r] = [a - f * b for a, b in zip(tab[r], tab[row])]
    basis[row] = col


def _simplex(tab, basis, cost, enter_limit):
    """Minimize cost; Bland's rule; entering columns below enter_limit only."""
    nrows = len(tab)
    while True:
        cb = [cost[b] for b in basis]
        entering = -1
        for j in range(enter_limit):
            if j in basis:
                continue
            red = cost[j] - sum(cb[r] * tab[r][j] for r in range(nrows) if tab[r][j])
            if red < 0:
                entering = j
                break
        if entering < 0:
            return OPTIMAL, None
        ratios = [
            (tab[r][-1] / tab[r][entering], basis[r], r)
            for r in range(nrows)
            if tab[r][entering] > 0
        ]
        if not ratios:
            return UNBOUNDED, entering
        _, _, row = min(ratios)
        _pivot(tab, basis, row, entering)


def solve(c, a_ub=(), b_ub=(), a_eq=(), b_eq=()):
    """Minimize c.x subject to a_ub x <= b_ub and a_eq x = b_eq, x free."""
    nv = len(c)
    a_ub = [list(map(Q, row)) for row in a_ub]
    b_ub = [Q(v) for v in b_ub]
    a_eq = [list(map(Q, row)) for row in a_eq]
    b_eq = [Q(v) for v in b_eq]
    c = [Q(v) for v in c]

    n_ub, n_eq = len(a_ub), len(a_eq)
    nrows = n_ub + n_eq
    art_start = 2 * nv + n_ub
    ncols = art_start + nrows
    tab = []
    row_sign = []
    for i in range(nrows):
        arow = a_ub[i] if i < n_ub else a_eq[i - n_ub]
        rhs = b_ub[i] if i < n_ub else b_eq[i - n_ub]
        row = arow + [-v for v in arow]
        row += [Q(1) if (i < n_ub and j == i) else Q(0) for j in range(n_ub)]
        sign = 1
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
            sign = -1
        row_sign.append(sign)
        row += [Q(1) if j == i else Q(0) for j in range(nrows)]
        tab.append(row + [rhs])

    basis = [art_start + i for i in range(nrows)]

    # phase 1
    phase1 = [Q(0)] * art_start + [Q(1)] * nrows
    _simplex(tab, basis, phase1, ncols)
    if sum(phase1[basis[r]] * tab[r][-1] for r in range(nrows)) != 0:
        return LpResult(INFEASIBLE)
    for r in range(nrows):
        if basis[r] >= art_start:
            for j in range(art_start):
                if tab[r][j] != 0:
                    _pivot(tab, basis, r, j)
                    break

    # phase 2 (artificial columns stay in the tableau but may not enter)
    cost = c + [-v for v in c] + [Q(0)] * (n_ub + nrows)
    status, entering = _simplex(tab, basis, cost, art_start)
    if status == UNBOUNDED:
        direction = [Q(0)] * art_start
        direction[entering] = Q(1)
        for r in range(nrows):
            if basis[r] < art_start:
                direction[basis[r]] = -tab[r][entering]
        ray = tuple(direction[j] - direction[nv + j] for j in range(nv))
        return LpResult(UNBOUNDED, ray=ray)

    xfull = [Q(0)] * art_start
    for r in range(nrows):
        if basis[r] < art_start:
            xfull[basis[r]] = tab[r][-1]
    x = tuple(xfull[j] - xfull[nv + j] for j in range(nv))
    objective = sum(ci * xi for ci, xi in zip(c, x))

    # simplex multipliers from the artificial columns (B^-1 e_i is stored
    # there); lam_i = -sign_i * y_i for <= rows, mu likewise for == rows
    cb = [cost[basis[r]] for r in range(nrows)]
    y = [
        sum(cb[r] * tab[r][art_start + i] for r in range(nrows))
        for i in range(nrows)
    ]
    lam = tuple(-row_sign[i] * y[i] for i in range(n_ub))
    mu = tuple(-row_sign[n_ub + k] * y[n_ub + k] for k in range(n_eq))
    return LpResult(OPTIMAL, x=x, objective=objective, dual_ub=lam, dual_eq=mu)


def certify_optimum(c, a_ub, b_ub, a_eq, b_eq, result: LpResult) -> bool:
    """Exact optimality certificate.

    Checks primal feasibility, dual feasibility, stationarity,
    complementary slackness and a zero duality gap; any failure is False.
    """
    if result.status != OPTIMAL:
        return False
    x = result.x
    for row, b in zip(a_ub, b_ub):
        if sum(Q(a) * xi for a, xi in zip(row, x)) > Q(b):
            return False
    for row, b in zip(a_eq, b_eq):
        if sum(Q(a) * xi for a, xi in zip(row, x)) != Q(b):
            return False
    lam = list(result.dual_ub or ())
    mu = list(result.dual_eq or ())
    if any(l < 0 for l in lam):
        return False
    for j in range(len(c)):
        s = Q(c[j])
        s += sum(lam[i] * Q(a_ub[i][j]) for i in range(len(a_ub)))
        s += sum(mu[k] * Q(a_eq[k][j]) for k in range(len(a_eq)))
        if s != 0:
            return False
    for i, (row, b) in enumerate(zip(a_ub, b_ub)):
        slack = Q(b) - sum(Q(a) * xi for a, xi in zip(row, x))
        if lam[i] * slack != 0:
            return False
    gap = result.objective
    gap += sum(lam[i] * Q(b_ub[i]) for i in range(len(b_ub)))
    gap += sum(mu[k] * Q(b_eq[k]) for k in range(len(b_eq)))
    return gap == 0
