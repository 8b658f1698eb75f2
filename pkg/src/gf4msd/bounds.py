"""Linear-programming and lattice-point machinery over invariant coefficients.

Enumerator families are affine maps from a few free rational parameters to
coefficient vectors; classical cuts demand nonnegative (dual) coefficients,
quantum cuts demand nonnegative success probability and a threshold inside
the stabilizer octahedron.  Feasibility questions run through the exact
simplex; integral searches enumerate lattice points directly and apply the
exact nonlinear verdicts as a post-filter.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import simplex
from .distill import DegenerateMapError, _n_poly, _odd_part_poly, quantum_verdict
from .enumerators import Enumerator, transform_xy
from .exact import Q, q_from_str, q_to_str
from .invariants import (
    InvariantParams,
    SelfDualParams,
    expand_family,
    expand_selfdual,
    num_cprime,
    num_dprime,
)
from .roots import poly_nonneg_on

SENSES = ("<=", ">=", "==")


class UnboundedRegionError(RuntimeError):
    pass


@dataclass(frozen=True)
class LinConstraint:
    coeffs: tuple
    sense: str
    rhs: Fraction

    def __post_init__(self):
        if self.sense not in SENSES:
            raise ValueError("sense must be one of %s" % (SENSES,))
        object.__setattr__(self, "coeffs", tuple(Q(c) for c in self.coeffs))
        object.__setattr__(self, "rhs", Q(self.rhs))

    def satisfied(self, point) -> bool:
        v = sum(c * Q(p) for c, p in zip(self.coeffs, point))
        if self.sense == "<=":
            return v <= self.rhs
        if self.sense == ">=":
            return v >= self.rhs
        return v == self.rhs

    def is_trivial(self):
        """None if the constraint involves a variable, else its truth value."""
        if any(self.coeffs):
            return None
        zero = Q(0)
        if self.sense == "<=":
            return zero <= self.rhs
        if self.sense == ">=":
            return zero >= self.rhs
        return zero == self.rhs


@dataclass(frozen=True)
class Polytope:
    dim: int
    names: tuple
    constraints: tuple

    def __post_init__(self):
        for c in self.constraints:
            if len(c.coeffs) != self.dim:
                raise ValueError("constraint dimension mismatch")

    def contains(self, point) -> bool:
        return all(c.satisfied(point) for c in self.constraints)

    def to_json(self) -> str:
        return json.dumps(
            {
                "dim": self.dim,
                "names": list(self.names),
                "constraints": [
                    {
                        "coeffs": [q_to_str(v) for v in c.coeffs],
                        "sense": c.sense,
                        "rhs": q_to_str(c.rhs),
                    }
                    for c in self.constraints
                ],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "Polytope":
        data = json.loads(text)
        cons = tuple(
            LinConstraint(
                tuple(q_from_str(v) for v in c["coeffs"]),
                c["sense"],
                q_from_str(c["rhs"]),
            )
            for c in data["constraints"]
        )
        return cls(int(data["dim"]), tuple(data["names"]), cons)


@dataclass(frozen=True)
class LatticeSpec:
    moduli: tuple
    offsets: tuple

    def __post_init__(self):
        if any(m <= 0 for m in self.moduli):
            raise ValueError("moduli must be positive")
        if len(self.moduli) != len(self.offsets):
            raise ValueError("moduli/offsets length mismatch")


def build_polytope(dim, names, rows):
    """Assemble constraints, dropping trivially-true rows.

    A trivially false row yields a polytope containing a marker constraint
    so feasibility still reports infeasible.
    """
    out = []
    for row in rows:
        t = row.is_trivial()
        if t is True:
            continue
        if t is False:
            # encode falsity as 0 * x <= -1 on the first variable
            out.append(LinConstraint((Q(0),) * dim, "<=", Q(-1)))
            continue
        out.append(row)
    return Polytope(dim, tuple(names), tuple(out))


# ---------------------------------------------------------------------------
# LP interface


@dataclass(frozen=True)
class LpVerdict:
    status: str  # "feasible" | "infeasible" | "unbounded"
    witness: tuple | None = None
    optimum: Fraction | None = None
    ray: tuple | None = None
    certified: bool | None = None


def _scaled(coeffs, rhs):
    """Clear denominators and divide by the content; preserves the row."""
    vals = list(coeffs) + [rhs]
    denom = 1
    for v in vals:
        denom = denom * Q(v).denominator // gcd(denom, Q(v).denominator)
    ints = [int(Q(v) * denom) for v in vals]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return ints[:-1], Q(ints[-1])


def _split_rows(polytope):
    a_ub, b_ub, a_eq, b_eq = [], [], [], []
    for c in polytope.constraints:
        t = c.is_trivial()
        if t is True:
            continue
        if t is False:
            return None
        coeffs, rhs = _scaled(c.coeffs, c.rhs)
        if c.sense == "<=":
            a_ub.append(coeffs)
            b_ub.append(rhs)
        elif c.sense == ">=":
            a_ub.append([-v for v in coeffs])
            b_ub.append(-rhs)
        else:
            a_eq.append(coeffs)
            b_eq.append(rhs)
    return a_ub, b_ub, a_eq, b_eq


def reduce_equalities(polytope: Polytope):
    """Eliminate == rows exactly, producing an inequality-only polytope.

    Returns (status, reduced, embed) where embed maps a reduced-space point
    back to the original variables; status is "ok" or "infeasible".
    Equality systems inconsistent over the rationals short-circuit.
    """
    eq_rows = [c for c in polytope.constraints if c.sense == "=="]
    ineq_rows = [c for c in polytope.constraints if c.sense != "=="]
    dim = polytope.dim
    if not eq_rows:
        return "ok", polytope, lambda t: t
    aug = [[Q(v) for v in c.coeffs] + [Q(c.rhs)] for c in eq_rows]
    pivots = []
    for col in range(dim):
        sel = None
        for r in range(len(aug)):
            if r in [p[0] for p in pivots]:
                continue
            if aug[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        piv = aug[sel][col]
        aug[sel] = [v / piv for v in aug[sel]]
        for r in range(len(aug)):
            if r != sel and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[sel])]
        pivots.append((sel, col))
    for r in range(len(aug)):
        if r not in [p[0] for p in pivots] and aug[r][dim] != 0:
            return "infeasible", None, None
    pivot_cols = {col: row for row, col in pivots}
    free_cols = [c for c in range(dim) if c not in pivot_cols]
    # v_col = base[col] + sum_j basis[col][j] * t_j
    base = [Q(0)] * dim
    basis = [[Q(0)] * len(free_cols) for _ in range(dim)]
    for j, fc in enumerate(free_cols):
        basis[fc][j] = Q(1)
    for col, row in pivot_cols.items():
        base[col] = aug[row][dim]
        for j, fc in enumerate(free_cols):
            basis[col][j] = -aug[row][fc]
    new_rows = []
    for c in ineq_rows:
        const = sum(a * b for a, b in zip(c.coeffs, base))
        coeffs = tuple(
            sum(c.coeffs[i] * basis[i][j] for i in range(dim))
            for j in range(len(free_cols))
        )
        new_rows.append(LinConstraint(coeffs, c.sense, c.rhs - const))
    names = tuple(polytope.names[fc] for fc in free_cols)
    reduced = build_polytope(len(free_cols), names, new_rows)

    def embed(t):
        return tuple(
            base[i] + sum(basis[i][j] * Q(t[j]) for j in range(len(free_cols)))
            for i in range(dim)
        )

    return "ok", reduced, embed


def lp_feasible(polytope: Polytope, objective=None, maximize=False) -> LpVerdict:
    """Exact feasibility / optimization over the polytope.

    Equality rows are eliminated exactly before the simplex runs.  With no
    objective, reports a feasible witness or infeasibility; with one, also
    the exact optimum (or an improving ray when unbounded).
    """
    status, reduced, embed = reduce_equalities(polytope)
    if status == "infeasible":
        return LpVerdict("infeasible")
    rows = _split_rows(reduced)
    if rows is None:
        return LpVerdict("infeasible")
    a_ub, b_ub, a_eq, b_eq = rows
    if objective is None:
        c = [Q(0)] * reduced.dim
        c_orig = None
    else:
        c_orig = [Q(v) for v in objective]
        # transform the objective through the equality elimination
        zero = embed((Q(0),) * reduced.dim)
        const = sum(a * b for a, b in zip(c_orig, zero))
        c = []
        for j in range(reduced.dim):
            unit = [Q(0)] * reduced.dim
            unit[j] = Q(1)
            img = embed(unit)
            c.append(sum(a * b for a, b in zip(c_orig, img)) - const)
        if maximize:
            c = [-v for v in c]
    if reduced.dim == 0:
        witness = embed(())
        opt = None
        if objective is not None:
            opt = sum(a * b for a, b in zip(c_orig, witness))
        return LpVerdict("feasible", witness=witness, optimum=opt, certified=True)
    res = simplex.solve(c, a_ub, b_ub, a_eq, b_eq)
    if res.status == simplex.INFEASIBLE:
        return LpVerdict("infeasible")
    if res.status == simplex.UNBOUNDED:
        ray = embed(res.ray)
        zero = embed((Q(0),) * reduced.dim)
        ray = tuple(r - z for r, z in zip(ray, zero))
        return LpVerdict("unbounded", ray=ray)
    certified = simplex.certify_optimum(c, a_ub, b_ub, a_eq, b_eq, res)
    optimum = None
    witness = embed(res.x)
    if objective is not None:
        optimum = sum(a * b for a, b in zip(c_orig, witness))
    return LpVerdict("feasible", witness=witness, optimum=optimum, certified=certified)


# ---------------------------------------------------------------------------
# 2-d vertex enumeration


def _ccw_sorted(points):
    cx = sum(p[0] for p in points) / len(points)
    cy = sum(p[1] for p in points) / len(points)

    def half(p):
        dx, dy = p[0] - cx, p[1] - cy
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def cmp(p, q_):
        hp, hq = half(p), half(q_)
        if hp != hq:
            return -1 if hp < hq else 1
        cross = (p[0] - cx) * (q_[1] - cy) - (p[1] - cy) * (q_[0] - cx)
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return 0

    return sorted(points, key=functools.cmp_to_key(cmp))


def enumerate_vertices_2d(polytope: Polytope):
    """All vertices of a bounded 2-d polytope, counterclockwise.

    Vertices are pairwise intersections of constraint boundary lines that
    satisfy every constraint; an unbounded region raises.
    """
    if polytope.dim != 2:
        raise ValueError("vertex enumeration requires dim = 2")
    for i in range(2):
        obj = [Q(0)] * 2
        obj[i] = Q(1)
        for mx in (False, True):
            v = lp_feasible(polytope, objective=obj, maximize=mx)
            if v.status == "unbounded":
                raise UnboundedRegionError("region is unbounded in %s" % polytope.names[i])
            if v.status == "infeasible":
                return []
    lines = [(c.coeffs, c.rhs) for c in polytope.constraints]
    pts = set()
    for i in range(len(lines)):
        (a1, b1), r1 = lines[i][0], lines[i][1]
        for j in range(i + 1, len(lines)):
            (a2, b2), r2 = lines[j][0], lines[j][1]
            det = a1 * b2 - b1 * a2
            if det == 0:
                continue
            x = (r1 * b2 - b1 * r2) / det
            y = (a1 * r2 - r1 * a2) / det
            if polytope.contains((x, y)):
                pts.add((x, y))
    return _ccw_sorted(list(pts))


# ---------------------------------------------------------------------------
# lattice-point enumeration


def count_lattice_points(polytope: Polytope, lattice: LatticeSpec, extra_filter=None):
    """Exact enumeration of lattice points inside the polytope.

    Variable ranges come from LP; dimensions above 3 are rejected.  The
    optional filter (e.g. the exact quantum verdict) prunes the final list.
    Returns (count, sorted points).
    """
    if polytope.dim > 3:
        raise ValueError("lattice enumeration supports dim <= 3")
    if len(lattice.moduli) != polytope.dim:
        raise ValueError("lattice dimension mismatch")
    ranges = []
    for i in range(polytope.dim):
        obj = [Q(0)] * polytope.dim
        obj[i] = Q(1)
        lo = lp_feasible(polytope, objective=obj, maximize=False)
        hi = lp_feasible(polytope, objective=obj, maximize=True)
        if lo.status == "infeasible":
            return 0, []
        if lo.status == "unbounded" or hi.status == "unbounded":
            raise UnboundedRegionError("polytope unbounded in variable %d" % i)
        m, o = lattice.moduli[i], Q(lattice.offsets[i])
        start = -((o - lo.optimum) // m)  # smallest t with o + t*m >= lo
        stop = (hi.optimum - o) // m
        ranges.append([o + t * m for t in range(int(start), int(stop) + 1)])

    found = []

    def rec(idx, partial):
        if idx == polytope.dim:
            if polytope.contains(partial):
                if extra_filter is None or extra_filter(tuple(partial)):
                    found.append(tuple(partial))
            return
        for v in ranges[idx]:
            rec(idx + 1, partial + [v])

    rec(0, [])
    found.sort()
    return len(found), found


# ---------------------------------------------------------------------------
# affine enumerator families


@dataclass(frozen=True)
class AffineFamily:
    """Affine map from free parameters to (A, B, C) enumerator triples."""

    n: int
    kind: str  # "distill" | "selfdual"
    names: tuple
    members: tuple  # (A, B, C) for the pinned base, then one per parameter
    pins: tuple  # ((name, value), ...) for reporting

    @property
    def dim(self) -> int:
        return len(self.names)

    def enumerator_at(self, point) -> Enumerator:
        A = self.members[0][0]
        for v, (Ai, _, _) in zip(point, self.members[1:]):
            if v:
                A = A + Ai.scale(Q(v))
        return A

    def row(self, func, sense, rhs=Q(0)) -> LinConstraint:
        """Constraint func(A,B,C) <sense> rhs, with func linear memberwise."""
        base = func(*self.members[0])
        coeffs = tuple(func(*m) for m in self.members[1:])
        if sense == ">=":
            return LinConstraint(coeffs, ">=", Q(rhs) - base)
        if sense == "<=":
            return LinConstraint(coeffs, "<=", Q(rhs) - base)
        return LinConstraint(coeffs, "==", Q(rhs) - base)


def _triple(A: Enumerator, divisor) -> tuple:
    B = transform_xy(A).scale(Q(1, divisor))
    return (A, B, B - A)


def distillation_family(n: int, pin_trivial: bool = True) -> AffineFamily:
    """Free-coefficient family for odd n, pinned to c0' = 1.

    pin_trivial additionally fixes d0' = -6 (no weight-1 logical operator)
    and, for n >= 7, c1' = 3(5 - n)/2 (no weight-2 stabilizer).
    """
    if n % 2 == 0 or n < 5:
        raise ValueError("need odd n >= 5")
    nc, nd = num_cprime(n), num_dprime(n)
    cp = [Q(0)] * nc
    dp = [Q(0)] * nd
    cp[0] = Q(1)
    pins = [("c0", Q(1))]
    free = []
    if pin_trivial:
        dp[0] = Q(-6)
        pins.append(("d0", Q(-6)))
        if nc > 1:
            cp[1] = Q(3, 2) * (5 - n)
            pins.append(("c1", Q(3, 2) * (5 - n)))
        free = [("c", j) for j in range(2, nc)] + [("d", j) for j in range(1, nd)]
    else:
        free = [("c", j) for j in range(1, nc)] + [("d", j) for j in range(0, nd)]
    divisor = 2 ** (n - 1)
    members = [_triple(expand_family(InvariantParams(n, cp, dp)), divisor)]
    names = []
    for kind, j in free:
        c2 = [Q(0)] * nc
        d2 = [Q(0)] * nd
        (c2 if kind == "c" else d2)[j] = Q(1)
        members.append(_triple(expand_family(InvariantParams(n, c2, d2)), divisor))
        names.append("%s%d" % (kind, j))
    fam = AffineFamily(n, "distill", tuple(names), tuple(members), tuple(pins))
    object.__setattr__(fam, "_free", tuple(free))
    return fam


def selfdual_family(n: int) -> AffineFamily:
    """Self-dual family for even n, pinned to c0 = 1; B = A and C = 0."""
    if n % 2 or n < 6:
        raise ValueError("need even n >= 6")
    nc = n // 6 + 1
    zero = Enumerator(n, (0,) * (n + 1))
    c0 = [Q(0)] * nc
    c0[0] = Q(1)
    members = [(expand_selfdual(SelfDualParams(n, c0)),) * 2 + (zero,)]
    names = []
    for j in range(1, nc):
        cj = [Q(0)] * nc
        cj[j] = Q(1)
        A = expand_selfdual(SelfDualParams(n, cj))
        members.append((A, A, zero))
        names.append("c%d" % j)
    fam = AffineFamily(n, "selfdual", tuple(names), tuple(members), (("c0", Q(1)),))
    object.__setattr__(fam, "_free", tuple(("c", j) for j in range(1, nc)))
    return fam


def family_params(fam: AffineFamily, point):
    """Parameter object (pins + free values) for a lattice/witness point."""
    if fam.kind == "distill":
        nc, nd = num_cprime(fam.n), num_dprime(fam.n)
        cp = [Q(0)] * nc
        dp = [Q(0)] * nd
        for name, val in fam.pins:
            (cp if name[0] == "c" else dp)[int(name[1:])] = val
        for (kind, j), v in zip(fam._free, point):
            (cp if kind == "c" else dp)[j] = Q(v)
        return InvariantParams(fam.n, tuple(cp), tuple(dp))
    nc = fam.n // 6 + 1
    c = [Q(0)] * nc
    c[0] = Q(1)
    for (_, j), v in zip(fam._free, point):
        c[j] = Q(v)
    return SelfDualParams(fam.n, tuple(c))


# linear functionals over (A, B, C)


def _coeff(which, j):
    idx = {"A": 0, "B": 1, "C": 2}[which]

    def f(*triple):
        return Q(triple[idx].coeffs[j])

    return f


def _success_at(t):
    # N at the eps with rbar^2 = t: sum_j A_{2j} (-t)^j
    def f(A, B, C):
        acc = Q(0)
        power = Q(1)
        for j in range(0, A.n + 1, 2):
            acc += Q(A.coeffs[j]) * power
            power *= -Q(t)
        return acc

    return f


def _odd_alternating_ninth(A, B, C):
    # sum_j C_{2j+1} (-1)^j 9^(-j)
    acc = Q(0)
    for j in range(0, (C.n + 1) // 2):
        c = Q(C.coeffs[2 * j + 1])
        if c:
            acc += c * Q((-1) ** j, 9**j)
    return acc


def _m_coefficient(lam, t):
    def f(A, B, C):
        m = _n_poly(A)
        odd = _odd_part_poly(C)
        val = Q(0)
        if t < len(m):
            val += Q(m[t])
        if t < len(odd):
            val += lam * Q(odd[t])
        return val

    return f


def numerator_coefficient_rows(fam: AffineFamily, lam: int, count: int):
    """Equality rows forcing the first `count` numerator coefficients to 0."""
    polys = [
        _poly_add(_n_poly(A), _poly_scale(_odd_part_poly(C), lam))
        for (A, B, C) in fam.members
    ]
    rows = []
    for t in range(count):
        base = polys[0][t] if t < len(polys[0]) else Q(0)
        coeffs = tuple(p[t] if t < len(p) else Q(0) for p in polys[1:])
        rows.append(LinConstraint(coeffs, "==", -Q(base)))
    return rows


def _poly_add(a, b):
    from .exact import poly_add

    return poly_add(a, b)


def _poly_scale(a, s):
    from .exact import poly_scale

    return poly_scale(a, s)


def classical_rows(fam: AffineFamily):
    """Nonnegativity of every dual (distill) or own (selfdual) coefficient."""
    rows = []
    which = "B" if fam.kind == "distill" else "A"
    for j in range(1, fam.n + 1):
        rows.append(fam.row(_coeff(which, j), ">="))
    return rows


def quantum_rows_distill(fam: AffineFamily):
    """Linearized quantum cuts: N(0) >= 0, N(eps_max) >= 0 and the
    sign-resolved threshold inequality for both logical sign choices."""
    n0 = _success_at(Q(1, 3))
    nmax = _success_at(Q(1, 9))
    rows = [fam.row(n0, ">="), fam.row(nmax, ">=")]
    for lam in (1, -1):
        def f(A, B, C, lam=lam):
            return 3 * nmax(A, B, C) + lam * _odd_alternating_ninth(A, B, C)

        rows.append(fam.row(f, ">="))
    return rows


def bernstein_rows(fam: AffineFamily, degree: int | None = None):
    """Sufficient success-positivity encoding: the Bernstein-basis
    coefficients of N(eps) on [0, 1] as linear >= 0 rows.

    Feasible points are guaranteed N >= 0; the encoding is not necessary,
    so it tightens rather than relaxes the exact constraint.
    """
    from .roots import bernstein_coefficients

    if degree is None:
        degree = fam.n + 1
    per_member = [bernstein_coefficients(_n_poly(A), degree) for (A, B, C) in fam.members]
    rows = []
    for j in range(degree + 1):
        coeffs = tuple(per_member[i + 1][j] for i in range(fam.dim))
        rows.append(LinConstraint(coeffs, ">=", -per_member[0][j]))
    return rows


def quantum_rows_selfdual(fam: AffineFamily, grid: int = 16):
    """Success cuts A(1, i rbar) >= 0 on a rational grid of rbar^2 in
    [0, 1/3], plus the eps -> 0 leading-coefficient sign condition."""
    rows = []
    for i in range(grid + 1):
        rows.append(fam.row(_success_at(Q(i, 3 * grid)), ">="))
    jtop = fam.n // 6
    if jtop >= 1:
        coeffs = [Q(0)] * fam.dim
        coeffs[fam.names.index("c%d" % jtop)] = Q((-1) ** jtop)
        rows.append(LinConstraint(tuple(coeffs), ">=", Q(0)))
    return rows


def nu_cancellation_rows(fam: AffineFamily, nu_target: int):
    """Equalities forcing eps_out = O(eps^nu): low-order numerator
    coefficients vanish for the natural sign choice."""
    lam = 1 if fam.n % 6 == 5 else -1
    return [fam.row(_m_coefficient(lam, t), "==") for t in range(nu_target)]


def distance_rows(fam: AffineFamily, d: int):
    """C_j = 0 (odd j < d) for quantum distance; A_j = 0 (even j < d) for
    the classical self-dual distance."""
    rows = []
    if fam.kind == "distill":
        for j in range(1, d, 2):
            rows.append(fam.row(_coeff("C", j), "=="))
    else:
        for j in range(2, d, 2):
            rows.append(fam.row(_coeff("A", j), "=="))
    return rows


# ---------------------------------------------------------------------------
# bound drivers


def nu_value(n: int, level: int) -> int:
    return (2 if n % 6 == 5 else 1) + 3 * level


def nu_polytope(n: int, level: int, use_quantum: bool) -> Polytope:
    fam = distillation_family(n, pin_trivial=True)
    rows = classical_rows(fam) + nu_cancellation_rows(fam, nu_value(n, level))
    if use_quantum:
        rows += quantum_rows_distill(fam)
    return build_polytope(fam.dim, fam.names, rows)


def max_nu_bound(n: int, use_quantum: bool = False, with_witness: bool = False):
    """Largest noise-suppression exponent consistent with the cuts.

    Feasibility of the cancellation levels is monotone, so the boundary
    level is located by bisection; non-trivial pins (no weight-1 logical,
    no weight-2 stabilizer) always apply.  With with_witness, returns
    (bound, witness point, family) instead of the bare bound.
    """
    if n % 6 not in (1, 5):
        raise ValueError("n must be congruent to +-1 mod 6")
    m = (n - (n % 6)) // 6
    kmax = 2 * m + 1 if n % 6 == 5 else 2 * m
    fam = distillation_family(n, pin_trivial=True)
    base_rows = classical_rows(fam)
    if use_quantum:
        base_rows = base_rows + quantum_rows_distill(fam)
    lam = 1 if n % 6 == 5 else -1
    all_eq = numerator_coefficient_rows(fam, lam, nu_value(n, kmax))
    witnesses = {}

    def feasible(level: int) -> bool:
        rows = base_rows + all_eq[: nu_value(n, level)]
        p = build_polytope(fam.dim, fam.names, rows)
        v = lp_feasible(p)
        if v.status == "feasible":
            witnesses[level] = v.witness
        return v.status == "feasible"

    if not feasible(0):
        raise RuntimeError("no feasible cancellation level for n=%d" % n)
    lo, hi = 0, kmax
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if feasible(mid):
            lo = mid
        else:
            hi = mid - 1
    if with_witness:
        return nu_value(n, lo), witnesses[lo], fam
    return nu_value(n, lo)


def distance_polytope(n: int, d: int, use_quantum: bool) -> Polytope:
    fam = distillation_family(n, pin_trivial=False)
    rows = classical_rows(fam) + distance_rows(fam, d)
    if use_quantum:
        rows.append(fam.row(_success_at(Q(1, 3)), ">="))
    return build_polytope(fam.dim, fam.names, rows)


def max_distance_bound(n: int, use_quantum: bool = False, with_witness: bool = False):
    """Largest quantum distance with a feasible enumerator (odd n >= 5).

    The quantum flag adds the nonnegative success probability of pure
    inputs, N(0) >= 0, which is what strengthens the classical bound.
    """
    if n % 2 == 0 or n < 5:
        raise ValueError("need odd n >= 5")
    fam = distillation_family(n, pin_trivial=False)
    base_rows = classical_rows(fam)
    if use_quantum:
        base_rows = base_rows + [fam.row(_success_at(Q(1, 3)), ">=")]
    c_rows = [fam.row(_coeff("C", j), "==") for j in range(1, n, 2)]
    witnesses = {}

    def feasible(d: int) -> bool:
        rows = base_rows + c_rows[: (d - 1) // 2]
        p = build_polytope(fam.dim, fam.names, rows)
        v = lp_feasible(p)
        if v.status == "feasible":
            witnesses[d] = v.witness
        return v.status == "feasible"

    if not feasible(3):
        return (1, None, fam) if with_witness else 1
    lo, hi = 1, (n - 1) // 2  # d = 2*level + 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if feasible(2 * mid + 1):
            lo = mid
        else:
            hi = mid - 1
    if with_witness:
        return 2 * lo + 1, witnesses[2 * lo + 1], fam
    return 2 * lo + 1


def selfdual_distance_polytope(n: int, d: int, use_quantum: bool, grid: int = 16) -> Polytope:
    fam = selfdual_family(n)
    rows = classical_rows(fam) + distance_rows(fam, d)
    if use_quantum:
        rows += quantum_rows_selfdual(fam, grid)
    return build_polytope(fam.dim, fam.names, rows)


def classical_distance_bound_selfdual(
    n: int, use_quantum: bool = False, with_witness: bool = False
):
    """Largest classical distance of a self-dual enumerator of even length."""
    if n % 2 or n < 6:
        raise ValueError("need even n >= 6")
    fam = selfdual_family(n)
    base_rows = classical_rows(fam)
    if use_quantum:
        base_rows = base_rows + quantum_rows_selfdual(fam)
    a_rows = [fam.row(_coeff("A", j), "==") for j in range(2, n + 1, 2)]
    witnesses = {}

    def feasible(d: int) -> bool:
        rows = base_rows + a_rows[: (d - 2) // 2]
        p = build_polytope(fam.dim, fam.names, rows)
        v = lp_feasible(p)
        if v.status == "feasible":
            witnesses[d] = v.witness
        return v.status == "feasible"

    lo, hi = 1, n // 2 + 1  # d = 2*level
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if feasible(2 * mid):
            lo = mid
        else:
            hi = mid - 1
    if with_witness:
        if 2 * lo not in witnesses:
            feasible(2 * lo)
        return 2 * lo, witnesses.get(2 * lo), fam
    return 2 * lo


# ---------------------------------------------------------------------------
# integral searches


def _step_for(value: Fraction, modulus: int) -> int:
    # smallest positive m with m * value in modulus * Z
    v = Q(value)
    if v == 0:
        return 1
    p, q_ = abs(v.numerator), v.denominator
    target = modulus * q_
    return target // gcd(p, target)


def integral_lattice(fam: AffineFamily) -> LatticeSpec:
    """Per-variable moduli making every tracked coefficient an integer
    divisible by three (diagonal translation of the congruences)."""
    which = 1 if fam.kind == "distill" else 0
    base = fam.members[0][which]
    for j in range(1, fam.n + 1):
        v = Q(base.coeffs[j])
        if v.denominator != 1 or v.numerator % 3:
            raise ValueError("pinned base violates the divisibility lattice")
    moduli = []
    for member in fam.members[1:]:
        enum = member[which]
        m = 1
        for j in range(1, fam.n + 1):
            c = Q(enum.coeffs[j])
            if c:
                step = _step_for(c, 3)
                m = m * step // gcd(m, step)
        moduli.append(m)
    return LatticeSpec(tuple(moduli), (0,) * fam.dim)


def quantum_filter_distill(fam: AffineFamily):
    """Exact nonlinear verdict: success nonnegativity on the physical
    interval plus the octahedron threshold test for both sign choices."""

    def ok(point) -> bool:
        A = fam.enumerator_at(point)
        try:
            return quantum_verdict(A).all_ok
        except DegenerateMapError:
            return False

    return ok


def quantum_filter_selfdual_enumerator(A: Enumerator) -> bool:
    """Exact verdict A(1, i rbar) >= 0 for all rbar^2 in [0, 1/3]."""
    qpoly = tuple(Q((-1) ** j) * A.coeffs[2 * j] for j in range((A.n // 2) + 1))
    good, _ = poly_nonneg_on(qpoly, 0, Q(1, 3))
    return good


def quantum_filter_selfdual(fam: AffineFamily):
    def ok(point) -> bool:
        return quantum_filter_selfdual_enumerator(fam.enumerator_at(point))

    return ok


def lattice_search(n: int, use_quantum: bool = False):
    """Count integral enumerators (coefficients divisible by 3) at length n.

    Odd n uses the dual coefficients of the full (c', d') family, even n
    the self-dual coefficients.  Returns (count, points, family).
    """
    if n % 2:
        fam = distillation_family(n, pin_trivial=False)
        filt = quantum_filter_distill(fam) if use_quantum else None
    else:
        fam = selfdual_family(n)
        filt = quantum_filter_selfdual(fam) if use_quantum else None
    poly = build_polytope(fam.dim, fam.names, classical_rows(fam))
    lattice = integral_lattice(fam)
    count, points = count_lattice_points(poly, lattice, extra_filter=filt)
    return count, points, fam
