"""Upper bounds on the number of distinct real roots of an expression.

Three routes are evaluated:

* the sign-rule bound 2t - 1 for a single t-sparse polynomial;
* a "naive" bound obtained by iterating the elimination step, where the
  multiplier sparsity at level n is bounded through the recurrence
  h(n+1) <= (m+2) * t**m * h(n)**2;
* a sharper "support" bound that tracks the set of exponents the level-n
  multipliers can possibly use.  The exponent sets grow by the sumset rule
  U(n+1) = S + 2*U(n) with S = (sum of the factor supports) - 1, so the
  level-n sparsity is at most |U(n)|, computed exactly when the sets stay
  under a cardinality cap and bounded by a binomial count otherwise.

Every bound depends only on the shape (k, m, t and the supports), never on
the exponent rows, so raising the alphas costs nothing.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .errors import InvalidExpressionError, SumsetCapExceeded
from .expression import SpsExpression, validate_expression

__all__ = [
    "DEFAULT_SUMSET_CAP",
    "descartes_bound",
    "sps1_bound",
    "h_bound_naive",
    "naive_bound",
    "support_base_set",
    "sumset",
    "sumset_power",
    "binomial_sumset_bound",
    "loose_sumset_bound",
    "support_bound",
    "support_bound_exact",
    "BoundReport",
    "evaluate_bounds",
]

DEFAULT_SUMSET_CAP = 10**6


def _sumset_cap(cap: int | None) -> int:
    if cap is not None:
        return cap
    return int(os.environ.get("SPS_MAX_SUMSET", DEFAULT_SUMSET_CAP))


def descartes_bound(t: int) -> int:
    """Distinct real roots (zero included) of a t-sparse polynomial: 2t - 1."""
    if t < 1:
        raise ValueError(f"sparsity must be at least 1, got {t}")
    return 2 * t - 1


def sps1_bound(h: int, m: int, t: int) -> int:
    """Root bound for a single term g * prod f_j**a_j: 2h + 2m(t-1) - 1."""
    if h < 1 or m < 1 or t < 1:
        raise ValueError(f"h, m, t must be positive, got {(h, m, t)}")
    return 2 * h + 2 * m * (t - 1) - 1


def h_bound_naive(n: int, m: int, t: int) -> int:
    """Level-n multiplier sparsity bound ((m+2) * t**m) ** (2**(n-1) - 1)."""
    if n < 1:
        raise ValueError(f"level must be at least 1, got {n}")
    if m < 1 or t < 1:
        raise ValueError(f"m, t must be positive, got {(m, t)}")
    return ((m + 2) * t**m) ** (2 ** (n - 1) - 1)


def _combined_bound(h_seq: list[int], k: int, m: int, t: int) -> int:
    """2*h_k + 4*sum(h_1..h_{k-1}) + 2m(2k-1)(t-1) - k for a given h sequence."""
    return 2 * h_seq[-1] + 4 * sum(h_seq[:-1]) + 2 * m * (2 * k - 1) * (t - 1) - k


def naive_bound(k: int, m: int, t: int) -> int:
    """Root bound for k terms with all multipliers equal to 1, naive h sequence."""
    if k < 1 or m < 1 or t < 1:
        raise ValueError(f"k, m, t must be positive, got {(k, m, t)}")
    h_seq = [h_bound_naive(n, m, t) for n in range(1, k + 1)]
    return _combined_bound(h_seq, k, m, t)


def sumset(a: frozenset[int] | set[int], b: frozenset[int] | set[int]) -> frozenset[int]:
    """Minkowski sum {x + y}."""
    return frozenset(x + y for x in a for y in b)


def sumset_power(s: frozenset[int] | set[int], p: int, cap: int | None = None) -> frozenset[int]:
    """Exact p-fold sumset of s; p = 0 gives {0} (the empty sum).

    Refuses with SumsetCapExceeded once an intermediate set outgrows the cap
    (default 10**6, overridable via the SPS_MAX_SUMSET environment variable).
    """
    if p < 0:
        raise ValueError(f"sumset power must be nonnegative, got {p}")
    cap = _sumset_cap(cap)
    if p == 0:
        return frozenset({0})
    if not s:
        return frozenset()
    if len(s) == 1:
        (x,) = s
        return frozenset({p * x})
    acc = frozenset(s)
    for _ in range(p - 1):
        acc = sumset(acc, s)
        if len(acc) > cap:
            raise SumsetCapExceeded(f"sumset grew past the cap of {cap} elements")
    if len(acc) > cap:
        raise SumsetCapExceeded(f"sumset grew past the cap of {cap} elements")
    return acc


def binomial_sumset_bound(s: int, p: int) -> int:
    """Non-decreasing-sequence count C(p + s, p) bounding any p-fold sumset of size-s sets."""
    if s < 0:
        raise ValueError(f"set size must be nonnegative, got {s}")
    if p < 1:
        raise ValueError(f"sumset power must be at least 1, got {p}")
    return math.comb(p + s, p)


def loose_sumset_bound(s: int, p: int) -> float:
    """Float companion of the binomial bound, (e * (1 + s/p)) ** p; display only."""
    if p < 1:
        raise ValueError(f"sumset power must be at least 1, got {p}")
    return (math.e * (1 + s / p)) ** p


def support_base_set(expr: SpsExpression) -> frozenset[int]:
    """The base exponent set (sum of factor supports) - 1; may contain -1."""
    violations = validate_expression(expr)
    if violations:
        raise InvalidExpressionError(violations)
    acc = frozenset({0})
    for f in expr.factors:
        acc = sumset(acc, f.support())
    return frozenset(x - 1 for x in acc)


def support_bound(k: int, m: int, t: int) -> int:
    """Support-route root bound with per-level binomial sparsity counts.

    Levels use h_n <= C(p + t**m, p) with p = 2**(n-1) - 1; for k = 1 this
    collapses to the single-term bound.
    """
    if k < 1 or m < 1 or t < 1:
        raise ValueError(f"k, m, t must be positive, got {(k, m, t)}")
    h_seq = [math.comb(2 ** (n - 1) - 1 + t**m, 2 ** (n - 1) - 1) for n in range(1, k + 1)]
    return _combined_bound(h_seq, k, m, t)


def _support_h_sequence(
    expr: SpsExpression, cap: int | None, exact_sumsets: bool = True
) -> tuple[list[int], list[int] | None, list[str]]:
    """Per-level sparsity bounds from exact support tracking.

    Returns (h sequence, exact level-set sizes or None past the cap, flags).
    The level sets follow U(1) = union of multiplier supports and
    U(n+1) = S + 2*U(n); their sizes bound the level-n multiplier sparsity
    for arbitrary multipliers.  Past the cardinality cap (or with
    ``exact_sumsets`` off) the remaining levels fall back to the binomial
    count (constant multipliers) or the naive recurrence (general
    multipliers); the cap adds a flag, an explicit opt-out does not.
    """
    k, m, t = expr.k, expr.m, expr.max_factor_sparsity
    base = support_base_set(expr)
    flags: list[str] = []
    all_g_constant = all(term.g.degree == 0 for term in expr.terms)

    level_set: frozenset[int] = frozenset()
    for term in expr.terms:
        level_set |= term.g.support()
    if not level_set:
        # every multiplier is zero; any sparsity bound of 1 per level is sound
        level_set = frozenset({0})
    sizes = [len(level_set)]
    exact = exact_sumsets
    for n in range(2, k + 1):
        if exact:
            try:
                level_set = sumset(base, sumset_power(level_set, 2, cap))
                if len(level_set) > _sumset_cap(cap):
                    raise SumsetCapExceeded("level support set grew past the cap")
                sizes.append(len(level_set))
                continue
            except SumsetCapExceeded:
                exact = False
                flags.append("sumset cap exceeded")
        if all_g_constant:
            p = 2 ** (n - 1) - 1
            sizes.append(math.comb(p + len(base), p))
        else:
            sizes.append((m + 2) * t**m * sizes[-1] ** 2)
    return sizes, (sizes.copy() if exact else None), flags


def support_bound_exact(expr: SpsExpression, cap: int | None = None) -> int:
    """Support-route bound using the expression's true base set and exact sumsets.

    Falls back per level once the cap bites (the returned value is then the
    flagged formula value described in ``evaluate_bounds``).
    """
    h_seq, _, _ = _support_h_sequence(expr, cap)
    return _combined_bound(h_seq, expr.k, expr.m, expr.max_factor_sparsity)


@dataclass(frozen=True)
class BoundReport:
    """Every evaluated bound for one expression.

    ``h_sequence_naive`` starts from the actual multiplier sparsity, so for
    all-1 multipliers it matches ``h_bound_naive`` level by level.
    ``h_sequence_support`` holds the per-level values the support bound
    used; ``exact_sumset_sizes`` repeats them when every level-set was
    enumerated exactly, and is None once the cap forced a fallback.
    ``descartes`` is populated for single-term expressions only, as the
    factor-wise sign-rule sum.  ``actual_h_sequence`` is filled when the
    caller hands ``evaluate_bounds`` the computed level states; each entry
    is the observed maximal multiplier sparsity at that level and never
    exceeds the corresponding bound entries.
    """

    descartes: int | None
    sps1_bound: int
    h_sequence_naive: list[int]
    naive_bound: int
    support_set_size: int
    h_sequence_support: list[int]
    support_bound: int
    exact_sumset_sizes: list[int] | None
    flags: list[str]
    actual_h_sequence: list[int] | None = None


def evaluate_bounds(
    expr: SpsExpression,
    cap: int | None = None,
    exact_sumsets: bool = True,
    level_states=None,
) -> BoundReport:
    """Evaluate every bound route on one expression.

    All outputs are invariant under changes to the exponent rows.  Pass the
    states from ``elimination_sequence`` as ``level_states`` to have the
    observed per-level multiplier sparsities reported alongside the bounds.
    """
    violations = validate_expression(expr)
    if violations:
        raise InvalidExpressionError(violations)
    k, m, t = expr.k, expr.m, expr.max_factor_sparsity
    h1 = expr.max_multiplier_sparsity

    h_naive = [h1]
    for _ in range(k - 1):
        h_naive.append((m + 2) * t**m * h_naive[-1] ** 2)
    naive = _combined_bound(h_naive, k, m, t)

    base = support_base_set(expr)
    h_support, exact_sizes, flags = _support_h_sequence(expr, cap, exact_sumsets)
    support = _combined_bound(h_support, k, m, t)

    descartes = None
    if k == 1:
        term = expr.terms[0]
        descartes = descartes_bound(term.g.sparsity)
        for a, f in zip(term.alphas, expr.factors):
            if a > 0:
                descartes += descartes_bound(f.sparsity)

    if support > naive:
        flags = flags + ["support bound exceeds naive bound"]

    actual = None
    if level_states is not None:
        actual = [
            max((term.g.sparsity for term in state.active_terms), default=0)
            for state in level_states
        ]

    return BoundReport(
        descartes=descartes,
        sps1_bound=sps1_bound(h1, m, t),
        h_sequence_naive=h_naive,
        naive_bound=naive,
        support_set_size=len(base),
        h_sequence_support=h_support,
        support_bound=support,
        exact_sumset_sizes=exact_sizes,
        flags=flags,
        actual_h_sequence=actual,
    )
