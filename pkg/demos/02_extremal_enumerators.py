"""Extremal enumerators of both invariant families.

The distillation family admits a unique enumerator cancelling the maximal
number of low-order error terms; its weight-2 coefficient is always
negative, so no code attains it.  The self-dual family's extremal member
of length 12m evaluates negatively at the pure magic-state point, ruling
out the corresponding classical codes.
"""

from fractions import Fraction as Q

from gf4msd import (
    extremal_A2,
    extremal_distillation_enumerator,
    selfdual_extremal_enumerator,
    signed_eval,
)

print("extremal distillation enumerators (odd n):")
for n in (5, 7, 11, 13, 17, 19):
    A = extremal_distillation_enumerator(n)
    print("  n=%2d  A_2 = %6d   %s" % (n, extremal_A2(n), A.pretty()))

print()
print("extremal self-dual enumerators (n = 12m) at the pure point:")
for n in range(12, 97, 12):
    A = selfdual_extremal_enumerator(n)
    val = signed_eval(A, Q(1, 3))
    print("  n=%2d  A(1, i/sqrt3) = %s  (< 0: %s)" % (n, val, val < 0))
