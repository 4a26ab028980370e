"""Multivariate identity testing through the Kronecker substitution.

Variable i maps to X**((d+1)**i) where d bounds the total degree; distinct
monomials stay distinct, so the multivariate expression is zero exactly
when its univariate image is.  The exponents explode, but the univariate
test never expands them.

Run:  python3 demos/05_kronecker.py
"""

from sps import (
    MultivariateSparsePoly,
    MvSpsExpression,
    MvTermSpec,
    expand_multivariate,
    kronecker_reduce,
    pit_decide,
    safe_kronecker_degree,
)

# P = (x*y - z)^2 - ((x*y)^2 - 2*x*y*z + z^2), identically zero
xy_minus_z = MultivariateSparsePoly(3, {(1, 1, 0): 1, (0, 0, 1): -1})
expansion = MultivariateSparsePoly(
    3, {(2, 2, 0): 1, (1, 1, 1): -2, (0, 0, 2): 1}
)
expr = MvSpsExpression(
    nvars=3,
    factors=(xy_minus_z, expansion),
    terms=(
        MvTermSpec((2, 0)),
        MvTermSpec((0, 1), MultivariateSparsePoly.constant(3, -1)),
    ),
)

d = safe_kronecker_degree(expr)
reduced = kronecker_reduce(expr)
print("safe degree bound d =", d)
print("factor images:")
for j, f in enumerate(reduced.factors):
    print(f"  factor {j}: {f}")
print()
print("multivariate expansion is zero:", expand_multivariate(expr).is_zero)
print("univariate verdict:            ", pit_decide(reduced).is_zero)
print()

# a nonzero cousin: flip one coefficient
not_quite = MultivariateSparsePoly(
    3, {(2, 2, 0): 1, (1, 1, 1): -2, (0, 0, 2): -1}
)
expr2 = MvSpsExpression(
    nvars=3,
    factors=(xy_minus_z, not_quite),
    terms=(
        MvTermSpec((2, 0)),
        MvTermSpec((0, 1), MultivariateSparsePoly.constant(3, -1)),
    ),
)
print("perturbed expression is zero:  ", pit_decide(kronecker_reduce(expr2)).is_zero)
