"""Brute-force verification machinery, independent of the elimination path.

Everything here takes the slow-but-unarguable route: full expansion of an
expression into a canonical polynomial, exact distinct-real-root counts via
Sturm sequences over the integers, random rational evaluation as a
falsification aid, and the product fixture with roots 1..2**n.  The fast
algorithms elsewhere in the package are validated against these functions,
so nothing in this module may depend on them.

Dense integer arithmetic is used for the remainder sequences: coefficients
are cleared to integers, pseudo-remainders replace rational division, and
every chain element is reduced by its (positive) content so coefficient
growth stays manageable without disturbing signs.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    EvaluationBudgetExceeded,
    ExpansionCapExceeded,
    InvalidExpressionError,
    SturmCapExceeded,
    CapExceeded,
)
from .expression import (
    ActiveTerm,
    LevelState,
    SpsExpression,
    initial_level,
    term_degree,
    validate_expression,
)
from .sparsepoly import Coefficient, SparsePoly, ONE

__all__ = [
    "DEFAULT_EXPANSION_CAP",
    "DEFAULT_STURM_CAP",
    "RootCount",
    "expand_expression",
    "expand_level",
    "expand_multivariate",
    "squarefree_part",
    "sturm_count",
    "positive_root_count",
    "check_transform_identity",
    "random_eval_check",
    "wilkinson_product",
]

DEFAULT_EXPANSION_CAP = 10**5
DEFAULT_STURM_CAP = 512


@dataclass(frozen=True)
class RootCount:
    distinct_real_roots: int
    method: str = "sturm"


# ---------------------------------------------------------------------------
# expansion


def _projected_term_sparsity(term: ActiveTerm, factors: tuple[SparsePoly, ...], level_degree: int) -> int:
    """Upper bound on the expanded sparsity of one term (bounds every intermediate too)."""
    bound = term.g.sparsity
    for a, f in zip(term.alphas, factors):
        if a:
            bound *= math.comb(a + f.sparsity - 1, f.sparsity - 1)
        if bound > level_degree + 1:
            return level_degree + 1
    return min(bound, level_degree + 1)


def expand_level(state: LevelState, size_cap: int = DEFAULT_EXPANSION_CAP) -> SparsePoly:
    """Fully expand the polynomial a level state represents.

    Refuses up front when the projected sparsity exceeds the cap; the
    projection also caps all intermediates, so an accepted expansion cannot
    blow up mid-way.
    """
    projected = 0
    for i, term in enumerate(state.active_terms):
        projected += _projected_term_sparsity(term, state.factors, term_degree(state, i))
        if projected > size_cap:
            raise ExpansionCapExceeded(
                f"projected expanded sparsity exceeds the cap of {size_cap} monomials"
            )
    total = SparsePoly.zero()
    for term in state.active_terms:
        prod = term.g
        for a, f in zip(term.alphas, state.factors):
            if a:
                prod = prod * f**a
        total = total + prod
    return total


def expand_expression(expr: SpsExpression, size_cap: int = DEFAULT_EXPANSION_CAP) -> SparsePoly:
    """Canonical expanded form of an expression (sum of g_i * prod f_j**alpha_ij)."""
    violations = validate_expression(expr)
    if violations:
        raise InvalidExpressionError(violations)
    return expand_level(initial_level(expr), size_cap)


# ---------------------------------------------------------------------------
# dense integer polynomials (internal): list of int coefficients, index = degree


def _strip(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _dense_from_sparse(p: SparsePoly, degree_cap: int) -> list[int]:
    if p.is_zero:
        return []
    if p.degree > degree_cap:
        raise SturmCapExceeded(f"degree {p.degree} exceeds the dense cap of {degree_cap}")
    denom = 1
    for _, c in p.items():
        if isinstance(c, Fraction):
            denom = denom * c.denominator // math.gcd(denom, c.denominator)
    out = [0] * (p.degree + 1)
    for e, c in p.items():
        out[e] = int(c * denom)
    return out


def _dense_to_sparse(c: list[int]) -> SparsePoly:
    return SparsePoly({e: v for e, v in enumerate(c) if v})


def _derivative_dense(c: list[int]) -> list[int]:
    return _strip([i * c[i] for i in range(1, len(c))])


def _content(c: list[int]) -> int:
    g = 0
    for v in c:
        g = math.gcd(g, v)
        if g == 1:
            break
    return g or 1


def _primitive(c: list[int]) -> list[int]:
    g = _content(c)
    return [v // g for v in c] if g > 1 else c


def _prem_signed(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b, scaled to a POSITIVE multiple of the true remainder."""
    lb = b[-1]
    db = len(b) - 1
    r = list(a)
    scalings = 0
    while len(r) - 1 >= db and r:
        lead = r.pop()
        shift = len(r) - db
        r = [lb * x for x in r]
        scalings += 1
        for i in range(db):
            r[shift + i] -= lead * b[i]
        _strip(r)
    if lb < 0 and scalings % 2 == 1:
        r = [-x for x in r]
    return r


def _gcd_dense(a: list[int], b: list[int]) -> list[int]:
    a, b = _primitive(list(a)), _primitive(list(b))
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _primitive(_prem_signed(a, b))
    if a and a[-1] < 0:
        a = [-x for x in a]
    return a


def _exact_div_dense(a: list[int], b: list[int]) -> list[int]:
    # exact quotient; callers guarantee b divides a (Gauss: quotient is integral)
    fa = [Fraction(x) for x in a]
    lb = Fraction(b[-1])
    db = len(b) - 1
    quotient = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        coef = fa[i] / lb
        quotient[i - db] = coef
        if coef:
            for j in range(db + 1):
                fa[i - db + j] -= coef * b[j]
    if any(fa[:db]) or any(c.denominator != 1 for c in quotient):
        raise ArithmeticError("division was not exact")
    return _strip([c.numerator for c in quotient])


def _squarefree_dense(c: list[int]) -> list[int]:
    c = _primitive(list(c))
    if len(c) <= 1:
        return c
    g = _gcd_dense(c, _derivative_dense(c))
    if len(g) == 1:
        return c
    return _primitive(_exact_div_dense(c, g))


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _variations(signs: list[int]) -> int:
    seq = [s for s in signs if s != 0]
    return sum(1 for u, v in zip(seq, seq[1:]) if u * v < 0)


def _sturm_chain(sq: list[int]) -> list[list[int]]:
    chain = [sq, _primitive(_derivative_dense(sq))]
    while len(chain[-1]) > 1:
        r = _prem_signed(chain[-2], chain[-1])
        if not r:
            break
        chain.append(_primitive([-x for x in r]))
    return [c for c in chain if c]


def squarefree_part(p: SparsePoly, degree_cap: int = DEFAULT_STURM_CAP) -> SparsePoly:
    """p divided by gcd(p, p'), normalized monic; same distinct roots as p."""
    if p.is_zero:
        raise ValueError("squarefree part of the zero polynomial is undefined")
    dense = _squarefree_dense(_dense_from_sparse(p, degree_cap))
    return _dense_to_sparse(dense).monic()


def sturm_count(p: SparsePoly, degree_cap: int = DEFAULT_STURM_CAP) -> RootCount:
    """Exact number of distinct real roots of p over the whole real line."""
    if p.is_zero:
        raise ValueError("root counting needs a nonzero polynomial")
    sq = _squarefree_dense(_dense_from_sparse(p, degree_cap))
    if len(sq) <= 1:
        return RootCount(0)
    chain = _sturm_chain(sq)
    at_minus_inf = [_sign(c[-1]) * (-1 if (len(c) - 1) % 2 else 1) for c in chain]
    at_plus_inf = [_sign(c[-1]) for c in chain]
    return RootCount(_variations(at_minus_inf) - _variations(at_plus_inf))


def positive_root_count(p: SparsePoly, degree_cap: int = DEFAULT_STURM_CAP) -> int:
    """Exact number of distinct roots in (0, +inf)."""
    if p.is_zero:
        raise ValueError("root counting needs a nonzero polynomial")
    _, shifted = p.split_x_power()
    sq = _squarefree_dense(_dense_from_sparse(shifted, degree_cap))
    if len(sq) <= 1:
        return 0
    chain = _sturm_chain(sq)
    at_zero = [_sign(c[0]) for c in chain]
    at_plus_inf = [_sign(c[-1]) for c in chain]
    return _variations(at_zero) - _variations(at_plus_inf)


def expand_multivariate(expr, size_cap: int = DEFAULT_EXPANSION_CAP):
    """Fully expand a multivariate expression; the Kronecker reduction's oracle."""
    from .pit import MultivariateSparsePoly, MvSpsExpression, validate_multivariate

    assert isinstance(expr, MvSpsExpression)
    violations = validate_multivariate(expr)
    if violations:
        raise InvalidExpressionError(violations)
    total = MultivariateSparsePoly(expr.nvars)
    for i, term in enumerate(expr.terms):
        prod = expr.term_multiplier(i)
        for a, f in zip(term.alphas, expr.factors):
            if a and not prod.is_zero:
                prod = prod * f**a
            if prod.sparsity > size_cap:
                raise ExpansionCapExceeded(
                    f"multivariate expansion exceeds the cap of {size_cap} monomials"
                )
        total = total + prod
        if total.sparsity > size_cap:
            raise ExpansionCapExceeded(
                f"multivariate expansion exceeds the cap of {size_cap} monomials"
            )
    return total


# ---------------------------------------------------------------------------
# cross-checks on the elimination step


def check_transform_identity(
    state: LevelState,
    next_state: LevelState,
    pivot: int | None,
    size_cap: int = DEFAULT_EXPANSION_CAP,
) -> bool:
    """Expand both levels and verify the defining identity of the elimination step.

    With phi the state's polynomial, T the pivot term and pi the product of
    the factors, the next level must satisfy

        next * T == g_pivot * pi * (phi' * T - phi * T')

    exactly.  ``pivot`` indexes the state's active terms; None means no
    transformation was applied, which checks vacuously.
    """
    if pivot is None:
        return True
    pivot_term = state.active_terms[pivot]
    t_poly = expand_level(
        LevelState(state.level, (pivot_term,), state.factors), size_cap
    )
    pi = ONE
    for f in state.factors:
        pi = pi * f
    phi = expand_level(state, size_cap)
    phi_next = expand_level(next_state, size_cap)
    lhs = phi_next * t_poly
    rhs = pivot_term.g * pi * (phi.derivative() * t_poly - phi * t_poly.derivative())
    return lhs == rhs


# ---------------------------------------------------------------------------
# random evaluation (falsification only)


def _eval_bits_estimate(value: Coefficient, power: int) -> int:
    if value in (0, 1, -1):
        return 1
    return power * (value.numerator.bit_length() + value.denominator.bit_length())


def random_eval_check(
    expr: SpsExpression,
    n_points: int = 8,
    seed: int = 0,
    bit_budget: int = 2**20,
) -> bool:
    """Evaluate at seeded random rational points without expanding.

    Returns False as soon as some point evaluates to a nonzero value (the
    expression is then definitely nonzero); True means only that no witness
    was found.  Refuses when the exponents would force numbers past the bit
    budget.
    """
    violations = validate_expression(expr)
    if violations:
        raise InvalidExpressionError(violations)
    rng = random.Random(seed)
    for _ in range(n_points):
        x = Fraction(rng.randint(-999, 999), rng.randint(1, 50))
        factor_values = [f.evaluate(x) for f in expr.factors]
        total: Coefficient = 0
        for term in expr.terms:
            cost = sum(
                _eval_bits_estimate(v, a) for v, a in zip(factor_values, term.alphas)
            )
            if cost > bit_budget:
                raise EvaluationBudgetExceeded(
                    f"evaluation would exceed the budget of {bit_budget} bits"
                )
            prod: Coefficient = term.g.evaluate(x)
            for v, a in zip(factor_values, term.alphas):
                if prod == 0:
                    break
                prod *= v**a
            total += prod
        if total != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# fixtures


def wilkinson_product(n: int, cap: int = 4) -> SparsePoly:
    """The expanded product of (X - i) for i = 1 .. 2**n: 2**n distinct real roots."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    if n > cap:
        raise CapExceeded(f"order {n} exceeds the cap of {cap} (degree {2**cap})")
    prod = ONE
    for i in range(1, 2**n + 1):
        prod = prod * SparsePoly({1: 1, 0: -i})
    return prod
