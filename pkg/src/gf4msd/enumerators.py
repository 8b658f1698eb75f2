"""Exact polynomial algebra for weight enumerators.

An Enumerator is a homogeneous degree-n bivariate polynomial
A(x, y) = sum_j A_j x^(n-j) y^j stored by y-degree with exact integer (or,
during linear-programming work, rational) coefficients.  All operations
here are pure functions on immutable values; no floating point anywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .exact import Q, as_int_if_possible, q_from_str, q_to_str


class MacWilliamsError(ValueError):
    """The dual transform produced evidence the input was not a code enumerator."""


@dataclass(frozen=True)
class Enumerator:
    n: int
    coeffs: tuple

    def __post_init__(self):
        c = tuple(as_int_if_possible(x) for x in self.coeffs)
        if len(c) != self.n + 1:
            raise ValueError("need %d coefficients, got %d" % (self.n + 1, len(c)))
        object.__setattr__(self, "coeffs", c)

    def __getitem__(self, j: int):
        return self.coeffs[j]

    def __add__(self, other: "Enumerator") -> "Enumerator":
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return Enumerator(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Enumerator") -> "Enumerator":
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return Enumerator(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, s) -> "Enumerator":
        return Enumerator(self.n, tuple(a * s for a in self.coeffs))

    def total(self):
        """A(1, 1): the codeword count for a code-derived enumerator."""
        return sum(self.coeffs)

    def is_even_only(self) -> bool:
        return all(a == 0 for j, a in enumerate(self.coeffs) if j % 2 == 1)

    def is_odd_only(self) -> bool:
        return all(a == 0 for j, a in enumerate(self.coeffs) if j % 2 == 0)

    def is_integral(self) -> bool:
        return all(isinstance(a, int) for a in self.coeffs)

    def support(self):
        return tuple(j for j, a in enumerate(self.coeffs) if a)

    def pretty(self, var: str = "y") -> str:
        terms = []
        for j, a in enumerate(self.coeffs):
            if not a:
                continue
            if j == 0:
                terms.append(q_to_str(a))
            elif j == 1:
                terms.append("%s%s" % ("" if a == 1 else q_to_str(a), var))
            else:
                terms.append("%s%s^%d" % ("" if a == 1 else q_to_str(a), var, j))
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def canonical_key(self) -> str:
        return "%d:%s" % (self.n, ",".join(q_to_str(a) for a in self.coeffs))

    def to_json(self) -> str:
        if self.is_integral():
            return json.dumps({"n": self.n, "coeffs": list(self.coeffs)})
        return json.dumps({"n": self.n, "coeffs": [q_to_str(a) for a in self.coeffs]})

    @classmethod
    def from_json(cls, text: str) -> "Enumerator":
        data = json.loads(text)
        coeffs = [q_from_str(c) if isinstance(c, str) else c for c in data["coeffs"]]
        return cls(int(data["n"]), tuple(coeffs))

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "Enumerator":
        c = [0] * (n + 1)
        for j, a in dict(pairs).items():
            c[j] = a
        return cls(n, tuple(c))

    def csv_rows(self):
        return [(j, q_to_str(a)) for j, a in enumerate(self.coeffs)]


def transform_xy(A: Enumerator) -> Enumerator:
    """A(x + 3y, x - y), expanded exactly (no divisor).

    Coefficient of y^k picks up, from each A_j x^(n-j) y^j, the binomial
    convolution of (x+3y)^(n-j) against (x-y)^j.
    """
    n = A.n
    out = [0] * (n + 1)
    for j, a in enumerate(A.coeffs):
        if a == 0:
            continue
        for k in range(n + 1):
            s = 0
            for i in range(max(0, k - (n - j)), min(j, k) + 1):
                s += comb(n - j, k - i) * 3 ** (k - i) * comb(j, i) * (-1) ** i
            if s:
                out[k] += a * s
    return Enumerator(n, tuple(out))


def macwilliams(A: Enumerator, codeword_count) -> Enumerator:
    """Dual enumerator B(x, y) = A(x + 3y, x - y) / codeword_count.

    Raises MacWilliamsError when the declared count disagrees with A(1,1),
    or when an all-integer input produces a non-integer coefficient (the
    input then cannot be the enumerator of a code; nothing is rounded).
    """
    if A.total() != codeword_count:
        raise MacWilliamsError(
            "codeword count %s != A(1,1) = %s" % (codeword_count, A.total())
        )
    raw = transform_xy(A)
    coeffs = tuple(Q(a, 1) / codeword_count for a in raw.coeffs)
    if A.is_integral():
        bad = [j for j, c in enumerate(coeffs) if Q(c).denominator != 1]
        if bad:
            raise MacWilliamsError(
                "non-integer dual coefficients at degrees %s" % (bad,)
            )
    return Enumerator(A.n, coeffs)


def logical_enumerator(A: Enumerator, B: Enumerator) -> Enumerator:
    """C = B - A, the enumerator of logical (coset) operators."""
    if A.n != B.n:
        raise ValueError("degree mismatch")
    C = B - A
    neg = [j for j, c in enumerate(C.coeffs) if c < 0]
    if neg:
        raise ValueError("B_j < A_j at degrees %s; inputs inconsistent" % (neg,))
    return C


def signed_eval(A: Enumerator, rbar2) -> Fraction:
    """A(1, i rbar) = sum_j A_{2j} (-rbar^2)^j, exact in rbar^2.

    Requires all odd coefficients to vanish (stabilizer part only).
    """
    if not A.is_even_only():
        raise ValueError("signed evaluation needs an even-only enumerator")
    t = Q(rbar2)
    acc = Q(0)
    power = Q(1)
    for j in range(0, A.n + 1, 2):
        acc += A.coeffs[j] * power
        power *= -t
    return acc


def alt_odd_eval(C: Enumerator, t) -> Fraction:
    """sum_j C_{2j+1} (-1)^j t^(2j+1), exact.

    Requires all even coefficients to vanish (logical part only).
    """
    if not C.is_odd_only():
        raise ValueError("alternating odd evaluation needs an odd-only enumerator")
    t = Q(t)
    acc = Q(0)
    sign = 1
    for j in range(1, C.n + 1, 2):
        if C.coeffs[j]:
            acc += sign * C.coeffs[j] * t**j
        sign = -sign
    return acc
