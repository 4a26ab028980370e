"""Exact sparse polynomials: arithmetic that never expands what it does not need.

Run:  python3 demos/01_sparse_arithmetic.py
"""

from fractions import Fraction

from sps import SparsePoly

# A polynomial is a sparse list of (exponent, coefficient) monomials.
p = SparsePoly({3: 1, 1: -2, 0: Fraction(1, 2)})
q = SparsePoly({1: 1, 0: 1})
print("p           =", p)
print("q           =", q)
print("p + q       =", p + q)
print("p * q       =", p * q)
print("p'          =", p.derivative())
print("q ** 5      =", q**5)
print("support(p)  =", sorted(p.support()))

# Exponents are plain Python integers, so astronomically high degrees are free
# as long as nothing forces an expansion.
huge = SparsePoly({10**20: 1})
print()
print("X^(10^20) * X^(10^20)    =", huge * huge)
print("derivative of X^(10^9)   =", SparsePoly({10**9: 1}).derivative())

# Products and powers stay exact over the rationals.
r = SparsePoly({2: Fraction(3, 4), 0: -1})
print()
print("r        =", r)
print("r^2      =", r * r)
print("r^2 at 2 =", (r * r).evaluate(2))
