"""Sum-of-products expressions over shared sparse factors.

An expression is sum(i) of g_i * prod(j) f_j**alpha_ij: a shared list of
nonzero sparse factors f_j, and one term per row of the exponent matrix,
each with an optional sparse multiplier g_i (default 1).  Powers are never
expanded here; the alpha_ij stay symbolic, so they may be astronomically
large.

The elimination step rewrites such an expression into one with a term
removed, at the price of more complicated multipliers: for a chosen pivot
term p, every other term's multiplier becomes

    new_g_i = prod_f * (g_p * g_i' - g_p' * g_i)
              + g_p * g_i * sum_j (alpha_ij - alpha_pj) * f_j' * prod(l != j) f_l

with the exponent rows unchanged, where prod_f is the product of all
factors.  Iterating the step with a maximal-degree pivot drives both the
real-root bounds and the identity test.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import InvalidExpressionError
from .sparsepoly import Coefficient, SparsePoly, normalize_coeff, ONE

__all__ = [
    "TermSpec",
    "SpsExpression",
    "ActiveTerm",
    "LevelState",
    "validate_expression",
    "initial_level",
    "term_degree",
    "term_leading_coeff",
    "eliminate_term",
    "choose_pivot",
    "pivot_position",
    "elimination_sequence",
]


@dataclass(frozen=True)
class TermSpec:
    """One summand: exponent row alphas plus the sparse multiplier g."""

    alphas: tuple[int, ...]
    g: SparsePoly = ONE

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(self.alphas))


@dataclass(frozen=True)
class SpsExpression:
    """Shared factors plus terms; see the module docstring for the shape."""

    factors: tuple[SparsePoly, ...]
    terms: tuple[TermSpec, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        object.__setattr__(self, "terms", tuple(self.terms))

    @property
    def k(self) -> int:
        return len(self.terms)

    @property
    def m(self) -> int:
        return len(self.factors)

    @property
    def max_factor_sparsity(self) -> int:
        """The t of the expression: largest factor sparsity."""
        return max((f.sparsity for f in self.factors), default=0)

    @property
    def max_multiplier_sparsity(self) -> int:
        """The h of the expression: largest multiplier sparsity (at least 1)."""
        return max(max((t.g.sparsity for t in self.terms), default=1), 1)

    def factor_product(self) -> SparsePoly:
        prod = ONE
        for f in self.factors:
            prod = prod * f
        return prod


def validate_expression(expr: SpsExpression) -> list[str]:
    """Check structural invariants; returns one message per violation."""
    violations = []
    if expr.m < 1:
        violations.append("expression has no factors")
    if expr.k < 1:
        violations.append("expression has no terms")
    for j, f in enumerate(expr.factors, start=1):
        if f.is_zero:
            violations.append(f"factor {j} is the zero polynomial")
    for i, term in enumerate(expr.terms, start=1):
        if len(term.alphas) != expr.m:
            violations.append(f"term {i}: expected {expr.m} exponents, got {len(term.alphas)}")
        for j, a in enumerate(term.alphas, start=1):
            if a < 0:
                violations.append(f"term {i}: exponent {j} is negative")
    return violations


@dataclass(frozen=True)
class ActiveTerm:
    """A surviving term at some elimination level (multiplier is nonzero)."""

    original_index: int
    g: SparsePoly
    alphas: tuple[int, ...]


@dataclass(frozen=True)
class LevelState:
    """The expression after ``level - 1`` elimination steps.

    Terms whose multiplier vanished are dropped on construction.  When a
    step was applied to this state, ``pivot_original_index`` records which
    original term served as the pivot.
    """

    level: int
    active_terms: tuple[ActiveTerm, ...]
    factors: tuple[SparsePoly, ...]
    pivot_original_index: int | None = None

    def __post_init__(self):
        object.__setattr__(
            self, "active_terms", tuple(t for t in self.active_terms if not t.g.is_zero)
        )

    @property
    def syntactically_zero(self) -> bool:
        return not self.active_terms


def initial_level(expr: SpsExpression) -> LevelState:
    terms = tuple(
        ActiveTerm(i, term.g, term.alphas) for i, term in enumerate(expr.terms)
    )
    return LevelState(level=1, active_terms=terms, factors=expr.factors)


def _check_index(state: LevelState, index: int) -> ActiveTerm:
    if not 0 <= index < len(state.active_terms):
        raise ValueError(
            f"term index {index} is not active at level {state.level} "
            f"({len(state.active_terms)} active terms)"
        )
    return state.active_terms[index]


def term_degree(state: LevelState, index: int) -> int:
    """Exact degree of g_i * prod f_j**alpha_ij, without expanding any power.

    Exact because leading coefficients of nonzero polynomials cannot cancel
    in a product.
    """
    term = _check_index(state, index)
    total = term.g.degree
    for a, f in zip(term.alphas, state.factors):
        total += a * f.degree
    return total


def term_leading_coeff(state: LevelState, index: int) -> Coefficient:
    """Leading coefficient of a term: lc(g) * prod lc(f_j)**alpha_ij."""
    term = _check_index(state, index)
    lc = term.g.leading_coeff
    for a, f in zip(term.alphas, state.factors):
        lc = lc * f.leading_coeff**a
    return normalize_coeff(lc)


def eliminate_term(state: LevelState, pivot: int) -> LevelState:
    """One elimination step: remove the pivot term, rebuild the others' multipliers.

    Returns the next level.  Rewritten multipliers that collapse to zero are
    dropped; eliminating the only active term yields a syntactically zero
    state.
    """
    pivot_term = _check_index(state, pivot)
    factors = state.factors
    m = len(factors)

    # prod of every factor except j, via prefix/suffix products
    prefix = [ONE] * (m + 1)
    for j, f in enumerate(factors):
        prefix[j + 1] = prefix[j] * f
    suffix = [ONE] * (m + 1)
    for j in range(m - 1, -1, -1):
        suffix[j] = factors[j] * suffix[j + 1]
    prod_all = prefix[m]
    # f_j' times the product of the other factors
    shift_basis = [
        factors[j].derivative() * (prefix[j] * suffix[j + 1]) for j in range(m)
    ]

    g_p = pivot_term.g
    g_p_prime = g_p.derivative()
    new_terms = []
    for pos, term in enumerate(state.active_terms):
        if pos == pivot:
            continue
        g_i = term.g
        wronskian = g_p * g_i.derivative() - g_p_prime * g_i
        shift = SparsePoly.zero()
        for j in range(m):
            scale = term.alphas[j] - pivot_term.alphas[j]
            if scale:
                shift = shift + scale * shift_basis[j]
        new_g = prod_all * wronskian + (g_p * g_i) * shift
        if not new_g.is_zero:
            new_terms.append(ActiveTerm(term.original_index, new_g, term.alphas))

    return LevelState(level=state.level + 1, active_terms=tuple(new_terms), factors=factors)


def choose_pivot(state: LevelState) -> int:
    """Pivot rule: active term of maximal degree, lowest original index on ties."""
    if not state.active_terms:
        raise ValueError("no active terms to pivot on")
    best = 0
    best_degree = term_degree(state, 0)
    for i in range(1, len(state.active_terms)):
        d = term_degree(state, i)
        if d > best_degree:
            best, best_degree = i, d
    return best


def pivot_position(state: LevelState) -> int | None:
    """Position among the active terms of the recorded pivot, or None."""
    if state.pivot_original_index is None:
        return None
    for pos, term in enumerate(state.active_terms):
        if term.original_index == state.pivot_original_index:
            return pos
    return None


def elimination_sequence(expr: SpsExpression) -> list[LevelState]:
    """Run the elimination to the end, recording every level.

    The sequence stops once at most one active term remains.  Each state
    except the last carries the original index of the pivot that produced
    the next state.
    """
    violations = validate_expression(expr)
    if violations:
        raise InvalidExpressionError(violations)
    state = initial_level(expr)
    states = [state]
    while len(state.active_terms) >= 2:
        pivot = choose_pivot(state)
        nxt = eliminate_term(state, pivot)
        states[-1] = replace(state, pivot_original_index=state.active_terms[pivot].original_index)
        states.append(nxt)
        state = nxt
    return states
