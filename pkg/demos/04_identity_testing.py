"""Deterministic identity testing without expansion.

The decision walks the elimination levels from the deepest one upward; each
level costs one exact rational power-sum test.  Expansion would need a
number of monomials proportional to the exponents, so instances that are
far beyond any expansion cap still decide in well under a second.

Run:  python3 demos/04_identity_testing.py
"""

import time

from sps import (
    ExpansionCapExceeded,
    SparsePoly,
    SpsExpression,
    TermSpec,
    exact_power_sum_oracle,
    expand_expression,
    pit_decide,
    pit_decide_with_oracle,
)

# (X+1)^2 written two ways; the difference is identically zero
f1 = SparsePoly({1: 1, 0: 1})
f2 = SparsePoly({2: -1, 1: -2, 0: -1})
expr = SpsExpression((f1, f2), (TermSpec((2, 0)), TermSpec((0, 1))))
verdict = pit_decide(expr)
print("(X+1)^2 + (-(X+1)^2)  is zero:", verdict.is_zero)
for check in verdict.trace.level_checks:
    print(f"  level {check.level}: max degree {check.max_degree}, "
          f"leading sum {check.leading_coeff_sum}, passed={check.passed}")
print()

# a nonzero instance fails fast, and the failed check certifies the verdict
bad = SpsExpression((SparsePoly({1: 1}),), (TermSpec((2,)), TermSpec((0,))))
print("X^2 + 1 is zero:", pit_decide(bad).is_zero)
print()

# powering headroom: exponents around 2 * 10^6
a = 10**6 + 1
f = SparsePoly({1: 3, 0: 1})
neg_sq = -(f * f)
planted = SpsExpression((f, neg_sq), (TermSpec((2 * a, 0)), TermSpec((0, a))))
t0 = time.perf_counter()
verdict = pit_decide(planted)
print(f"(3X+1)^{2*a} + (-(3X+1)^2)^{a} is zero: {verdict.is_zero} "
      f"(decided in {time.perf_counter() - t0:.3f}s)")
try:
    expand_expression(planted)
except ExpansionCapExceeded as exc:
    print("expansion refused as expected:", exc)
print()

# the oracle variant defers the power sums; the exact oracle may refuse
small = SpsExpression((f, neg_sq), (TermSpec((10, 0)), TermSpec((0, 5))))
oracle = exact_power_sum_oracle()
print("oracle variant on the small sibling:",
      pit_decide_with_oracle(small, oracle).is_zero)
