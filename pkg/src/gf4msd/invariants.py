"""Invariant-ring parametrizations of enumerator families.

Every admissible enumerator of a maximal self-orthogonal code of odd
length n is an exact linear combination built from the two invariants

    fhat = x^2 + 3 y^2        ghat = y^2 (x^2 - y^2)^2,

with coefficient vectors (c'_j, d'_j); self-dual codes of even length use
the fhat/ghat ring alone.  This module expands those parametrizations,
inverts them, and solves the extremal cancellation systems exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .enumerators import Enumerator
from .exact import Q, as_int_if_possible, binom, catalan, q_from_str, q_to_str

# y-degree coefficient vectors of the basic invariants (degrees 2 and 6)
FHAT = (1, 0, 3)
GHAT = (0, 0, 1, 0, -2, 0, 1)


def _conv(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _fg_power(fpow: int, gpow: int):
    out = [1]
    for _ in range(fpow):
        out = _conv(out, FHAT)
    for _ in range(gpow):
        out = _conv(out, GHAT)
    return out


def num_cprime(n: int) -> int:
    return (n - 1) // 6 + 1


def num_dprime(n: int) -> int:
    return (n - 5) // 6 + 1 if n >= 5 else 0


@dataclass(frozen=True)
class InvariantParams:
    """Coefficients (c'_j, d'_j) of the odd-length family of degree n."""

    n: int
    cprime: tuple
    dprime: tuple

    def __post_init__(self):
        if self.n % 2 == 0:
            raise ValueError("n must be odd")
        object.__setattr__(self, "cprime", tuple(Q(x) for x in self.cprime))
        object.__setattr__(self, "dprime", tuple(Q(x) for x in self.dprime))
        if len(self.cprime) != num_cprime(self.n):
            raise ValueError("expected %d c' coefficients" % num_cprime(self.n))
        if len(self.dprime) != num_dprime(self.n):
            raise ValueError("expected %d d' coefficients" % num_dprime(self.n))

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "cprime": [q_to_str(x) for x in self.cprime],
                "dprime": [q_to_str(x) for x in self.dprime],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "InvariantParams":
        data = json.loads(text)
        return cls(
            int(data["n"]),
            tuple(q_from_str(s) for s in data["cprime"]),
            tuple(q_from_str(s) for s in data["dprime"]),
        )


@dataclass(frozen=True)
class SelfDualParams:
    """Coefficients c_j of the even-length self-dual family of degree n."""

    n: int
    c: tuple

    def __post_init__(self):
        if self.n % 2:
            raise ValueError("n must be even")
        object.__setattr__(self, "c", tuple(Q(x) for x in self.c))
        if len(self.c) != self.n // 6 + 1:
            raise ValueError("expected %d coefficients" % (self.n // 6 + 1))


@dataclass(frozen=True)
class HSeries:
    order: int
    coeffs: tuple


def h_series(order: int) -> HSeries:
    """Power-series coefficients H_j = (-4)^j (1/2)_j / (2)_j = (-1)^j Catalan(j)."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    return HSeries(order, tuple((-1) ** j * catalan(j) for j in range(order + 1)))


def expand_family(p: InvariantParams) -> Enumerator:
    """Expand the odd-length parametrization into an exact Enumerator.

    A = x * sum_j c'_j fhat^((n-1)/2 - 3j) ghat^j
        + x y^2 (x^2 - y^2) * sum_j d'_j fhat^((n-5)/2 - 3j) ghat^j
    """
    n = p.n
    out = [Q(0)] * (n + 1)
    for j, c in enumerate(p.cprime):
        if c == 0:
            continue
        block = _fg_power((n - 1) // 2 - 3 * j, j)
        for deg, val in enumerate(block):
            out[deg] += c * val
    wedge = _conv([0, 0, 1], [1, 0, -1])  # y^2 (x^2 - y^2)
    for j, d in enumerate(p.dprime):
        if d == 0:
            continue
        block = _conv(wedge, _fg_power((n - 5) // 2 - 3 * j, j))
        for deg, val in enumerate(block):
            out[deg] += d * val
    return Enumerator(n, tuple(as_int_if_possible(v) for v in out))


def expand_selfdual(p: SelfDualParams) -> Enumerator:
    """A = sum_j c_j fhat^(n/2 - 3j) ghat^j for even n."""
    n = p.n
    out = [Q(0)] * (n + 1)
    for j, c in enumerate(p.c):
        if c == 0:
            continue
        block = _fg_power(n // 2 - 3 * j, j)
        for deg, val in enumerate(block):
            out[deg] += c * val
    return Enumerator(n, tuple(as_int_if_possible(v) for v in out))


def unit_family_basis(n: int):
    """Enumerators of the unit parameter vectors, c'-block then d'-block."""
    basis = []
    nc, nd = num_cprime(n), num_dprime(n)
    for i in range(nc):
        c = [0] * nc
        c[i] = 1
        basis.append(expand_family(InvariantParams(n, tuple(c), (0,) * nd)))
    for i in range(nd):
        d = [0] * nd
        d[i] = 1
        basis.append(expand_family(InvariantParams(n, (0,) * nc, tuple(d))))
    return basis


def unit_selfdual_basis(n: int):
    basis = []
    nc = n // 6 + 1
    for i in range(nc):
        c = [0] * nc
        c[i] = 1
        basis.append(expand_selfdual(SelfDualParams(n, tuple(c))))
    return basis


def params_from_enumerator(A: Enumerator) -> InvariantParams:
    """Invert expand_family exactly; raises if A is outside the family span."""
    n = A.n
    if n % 2 == 0:
        raise ValueError("n must be odd")
    basis = unit_family_basis(n)
    rows = len(basis)
    # solve the (n+1) x rows overdetermined system by elimination
    mat = [[Q(basis[r].coeffs[j]) for r in range(rows)] + [Q(A.coeffs[j])] for j in range(n + 1)]
    piv_rows = []
    for col in range(rows):
        sel = None
        for r in range(len(mat)):
            if r in piv_rows:
                continue
            if mat[r][col] != 0:
                sel = r
                break
        if sel is None:
            raise ValueError("family basis is degenerate")
        piv = mat[sel][col]
        mat[sel] = [v / piv for v in mat[sel]]
        for r in range(len(mat)):
            if r != sel and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [v - f * w for v, w in zip(mat[r], mat[sel])]
        piv_rows.append(sel)
    for r in range(len(mat)):
        if r not in piv_rows and mat[r][rows] != 0:
            raise ValueError("enumerator is not in the invariant family span")
    sol = [Q(0)] * rows
    for idx, r in enumerate(piv_rows):
        sol[idx] = mat[r][rows]
    nc = num_cprime(n)
    return InvariantParams(n, tuple(sol[:nc]), tuple(sol[nc:]))


# ---------------------------------------------------------------------------
# rescaled coordinates used by the cancellation systems (internal only)


def _c_from_cprime(n, j, cp):
    return Q(-16, 27) ** j * cp * Q(4) ** ((n - 1) // 2 - 3 * j)


def _d_from_dprime(n, j, dp):
    return Q(-16, 27) ** j * dp * Q(4) ** ((n - 5) // 2 - 3 * j)


def _cprime_from_c(n, j, c):
    return c / (Q(-16, 27) ** j * Q(4) ** ((n - 1) // 2 - 3 * j))


def _dprime_from_d(n, j, d):
    return d / (Q(-16, 27) ** j * Q(4) ** ((n - 5) // 2 - 3 * j))


def _linsolve(mat, rhs):
    """Exact Gaussian elimination; raises on a singular system."""
    m = [row[:] + [r] for row, r in zip(mat, rhs)]
    size = len(m)
    for col in range(size):
        sel = next((r for r in range(col, size) if m[r][col] != 0), None)
        if sel is None:
            raise ValueError("singular cancellation system")
        m[col], m[sel] = m[sel], m[col]
        piv = m[col][col]
        m[col] = [v / piv for v in m[col]]
        for r in range(size):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [v - f * w for v, w in zip(m[r], m[col])]
    return [m[r][size] for r in range(size)]


def extremal_distillation_params(n: int) -> InvariantParams:
    """Parameters cancelling the maximal number of phi-powers for odd n = +-1 mod 6.

    The cancellation series is  S~1 + (4/9) H S~2  for n = 6m+5 and
    H S~1 - (4/9) S~2  for n = 6m+1, with S~1 = sum c_{m-j} phi^j and the
    matching d-sums; the c/d unknowns are then pulled back to (c', d').
    """
    if n % 6 not in (1, 5):
        raise ValueError("n must be congruent to +-1 mod 6")
    c0 = Q(2) ** (n - 1)
    if n % 6 == 5:
        m = (n - 5) // 6
        H = h_series(2 * m).coeffs
        # unknown d_0..d_m from rows t = m..2m; then c_1..c_m explicitly
        mat, rhs = [], []
        for t in range(m, 2 * m + 1):
            row = [Q(0)] * (m + 1)
            for j in range(0, m + 1):
                if 0 <= t - j <= 2 * m:
                    row[m - j] += Q(4, 9) * H[t - j]
            mat.append(row)
            rhs.append(-c0 if t == m else Q(0))
        d = _linsolve(mat, rhs)
        c = [Q(0)] * (m + 1)
        c[0] = c0
        for t in range(0, m):
            acc = Q(0)
            for j in range(0, t + 1):
                acc += Q(4, 9) * H[t - j] * d[m - j]
            c[m - t] = -acc
    else:
        m = (n - 1) // 6
        if m == 0:
            return InvariantParams(n, (Q(1),), ())
        H = h_series(2 * m).coeffs
        # series H*S~1 - (4/9)*S~2 with S~1 = sum c_{m-j} phi^j (c_0 known)
        # and S~2 = sum d_{m-1-j} phi^j; rows t = 0..2m-1.
        # unknown order: c_1..c_m then d_0..d_{m-1}
        size = 2 * m
        mat = [[Q(0)] * size for _ in range(size)]
        rhs = [Q(0)] * size
        for t in range(2 * m):
            for j in range(0, m + 1):
                if t - j < 0:
                    continue
                coeff = Q(H[t - j])
                if m - j == 0:
                    rhs[t] -= coeff * c0
                else:
                    mat[t][m - j - 1] += coeff
            for j in range(0, m):
                if t == j:
                    mat[t][m + (m - 1 - j)] += Q(-4, 9)
        sol = _linsolve(mat, rhs)
        c = [c0] + sol[:m]
        d = sol[m:]
    cp = tuple(_cprime_from_c(n, j, cj) for j, cj in enumerate(c))
    dp = tuple(_dprime_from_d(n, j, dj) for j, dj in enumerate(d))
    return InvariantParams(n, cp, dp)


def extremal_distillation_enumerator(n: int) -> Enumerator:
    return expand_family(extremal_distillation_params(n))


def extremal_A2(n: int) -> int:
    """Closed-form A_2 of the extremal distillation enumerator (always < 0)."""
    if n % 6 == 5:
        m = (n - 5) // 6
        return -30 - 81 * m - 54 * m * m
    if n % 6 == 1:
        m = (n - 1) // 6
        return -9 * m - 54 * m * m
    raise ValueError("n must be congruent to +-1 mod 6")


def selfdual_extremal_params(n: int) -> SelfDualParams:
    """Closed-form coefficients of the extremal self-dual enumerator.

    c_j = (n / 2j) sum_r (-3)^(r+1) binom(n/2 - 3j + r, r) binom(3j - r - 2, j - r - 1)
    forces A_2 = A_4 = ... to vanish up to the extremal distance.
    """
    if n % 2 or n < 6:
        raise ValueError("n must be even and at least 6")
    cs = [Q(1)]
    for j in range(1, n // 6 + 1):
        s = Q(0)
        for r in range(j):
            s += (
                Q(-3) ** (r + 1)
                * binom(n // 2 - 3 * j + r, r)
                * binom(3 * j - r - 2, j - r - 1)
            )
        cs.append(Q(n, 2 * j) * s)
    return SelfDualParams(n, tuple(cs))


def selfdual_extremal_enumerator(n: int) -> Enumerator:
    return expand_selfdual(selfdual_extremal_params(n))
