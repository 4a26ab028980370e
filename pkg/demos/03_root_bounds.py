"""Real-root upper bounds versus exact Sturm counts.

Two bound routes are computed for each expression: a naive one driven by a
sparsity recurrence, and a sharper one that tracks the exact exponent sets
the elimination can reach.  Both are invariant under the power exponents,
which is the whole point: raising alphas adds no real roots.

Run:  python3 demos/03_root_bounds.py
"""

import random

from sps import (
    SparsePoly,
    SpsExpression,
    TermSpec,
    evaluate_bounds,
    expand_expression,
    sturm_count,
)

f = SparsePoly({1: 1, 0: 1})
expr = SpsExpression((f,), (TermSpec((3,)), TermSpec((1,))))
report = evaluate_bounds(expr)
expanded = expand_expression(expr)
print("expression: f^3 + f with f = X + 1")
print("  naive bound        =", report.naive_bound)
print("  support bound      =", report.support_bound)
print("  exact level sets   =", report.exact_sumset_sizes)
print("  true distinct roots =", sturm_count(expanded).distinct_real_roots)
print()

# alpha-independence: same structure, enormous exponents, identical bounds
huge = SpsExpression((f,), (TermSpec((10**30,)), TermSpec((10**9,))))
print("same shape with alphas 10^30 and 10^9:",
      "bounds identical" if evaluate_bounds(huge) == report else "BUG")
print()

# random instances: the bounds always dominate the exact root count
rng = random.Random(7)
print(f"{'k':>2} {'m':>2} {'t':>2} {'roots':>5} {'support':>8} {'naive':>10}")
for _ in range(10):
    m = rng.randint(1, 2)
    factors = tuple(
        SparsePoly({rng.randint(1, 3): rng.randint(1, 5), 0: rng.randint(-5, -1)})
        for _ in range(m)
    )
    k = rng.randint(1, 3)
    terms = tuple(
        TermSpec(tuple(rng.randint(0, 4) for _ in range(m))) for _ in range(k)
    )
    expr = SpsExpression(factors, terms)
    expanded = expand_expression(expr)
    roots = 0 if expanded.is_zero else sturm_count(expanded).distinct_real_roots
    rep = evaluate_bounds(expr)
    print(f"{k:>2} {m:>2} {expr.max_factor_sparsity:>2} {roots:>5} "
          f"{rep.support_bound:>8} {rep.naive_bound:>10}")
