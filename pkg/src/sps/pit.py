"""Deterministic identity testing for sum-of-products expressions.

The test runs the elimination to its last level and then checks, from the
deepest level back up, that each level's polynomial could be zero.  The
last level is a single term (or nothing), so it is zero exactly when it is
syntactically zero.  For an earlier level, once every deeper level is known
to vanish, the level's polynomial must be a scalar multiple of its pivot
term; the scalar shows up as the coefficient at the maximal term degree, so
a single exact rational test (sum of the leading coefficients of the
maximal-degree terms) decides the level.  Any failed check certifies that
the whole expression is nonzero.

The cost is polynomial in the sparsities and in the magnitude of the
exponent rows (through the leading-coefficient powers), never in the size
of the expanded polynomial.  The oracle variant outsources the rational
power-sum tests, dropping the dependence on the exponent magnitudes at the
price of an oracle that may refuse.

Multivariate inputs reduce to the univariate test through the substitution
X_i -> X**((d+1)**i), which is faithful whenever d bounds the total degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

from .errors import InvalidExpressionError, OracleRefusal
from .expression import (
    SpsExpression,
    TermSpec,
    elimination_sequence,
    term_degree,
    term_leading_coeff,
)
from .sparsepoly import Coefficient, SparsePoly, normalize_coeff

__all__ = [
    "PitLevelCheck",
    "PitTrace",
    "PitVerdict",
    "pit_decide",
    "pit_decide_with_oracle",
    "PowerSumOracle",
    "ExactPowerSumOracle",
    "exact_power_sum_oracle",
    "DEFAULT_ORACLE_BIT_BUDGET",
    "MultivariateSparsePoly",
    "MvTermSpec",
    "MvSpsExpression",
    "validate_multivariate",
    "safe_kronecker_degree",
    "kronecker_reduce",
]


# ---------------------------------------------------------------------------
# verdicts and traces


@dataclass(frozen=True)
class PitLevelCheck:
    """One leading-coefficient cancellation check.

    ``leading_coeff_sum`` is None when the test was delegated to an oracle.
    """

    level: int
    pivot_original_index: int | None
    active_term_count: int
    max_degree: int
    leading_coeff_sum: Coefficient | None
    passed: bool


@dataclass(frozen=True)
class PitTrace:
    """Checks in the order they ran: the final level first, then descending."""

    final_level: int
    final_is_zero: bool
    level_checks: tuple[PitLevelCheck, ...]


@dataclass(frozen=True)
class PitVerdict:
    is_zero: bool
    trace: PitTrace


def _decide(expr: SpsExpression, oracle: "PowerSumOracle | None") -> PitVerdict:
    states = elimination_sequence(expr)
    final = states[-1]
    final_zero = final.syntactically_zero
    checks: list[PitLevelCheck] = []
    verdict = final_zero
    if final_zero:
        for state in reversed(states[:-1]):
            n = len(state.active_terms)
            degrees = [term_degree(state, i) for i in range(n)]
            top = max(degrees)
            achievers = [i for i in range(n) if degrees[i] == top]
            if oracle is None:
                total: Coefficient = 0
                for i in achievers:
                    total += term_leading_coeff(state, i)
                total = normalize_coeff(total)
                passed = total == 0
            else:
                rows = []
                for i in achievers:
                    term = state.active_terms[i]
                    row = [(term.g.leading_coeff, 1)]
                    row.extend(
                        (f.leading_coeff, a) for f, a in zip(state.factors, term.alphas)
                    )
                    rows.append(row)
                total = None
                passed = oracle.decide_zero(rows)
            checks.append(
                PitLevelCheck(
                    level=state.level,
                    pivot_original_index=state.pivot_original_index,
                    active_term_count=n,
                    max_degree=top,
                    leading_coeff_sum=total,
                    passed=passed,
                )
            )
            if not passed:
                verdict = False
                break
    return PitVerdict(verdict, PitTrace(final.level, final_zero, tuple(checks)))


def pit_decide(expr: SpsExpression) -> PitVerdict:
    """Decide whether the expression is identically zero, without expanding it."""
    return _decide(expr, None)


def pit_decide_with_oracle(expr: SpsExpression, oracle: "PowerSumOracle") -> PitVerdict:
    """Same verdict as ``pit_decide``, with every rational power-sum test delegated.

    No exact big-power arithmetic happens in this path; an oracle refusal
    propagates as :class:`OracleRefusal`.
    """
    return _decide(expr, oracle)


# ---------------------------------------------------------------------------
# power-sum oracles


DEFAULT_ORACLE_BIT_BUDGET = 2**20


class PowerSumOracle:
    """Decision capability for sums of products of rational powers.

    ``decide_zero(rows)`` receives one row per summand, each a sequence of
    (base, exponent) pairs, and must decide whether
    sum_rows prod_pairs base**exponent == 0.  Implementations must be
    deterministic and sound; an implementation that cannot answer raises
    :class:`OracleRefusal` instead of guessing.
    """

    def decide_zero(self, rows: Sequence[Sequence[tuple[Coefficient, int]]]) -> bool:
        raise NotImplementedError


class ExactPowerSumOracle(PowerSumOracle):
    """Reference oracle: exact exponentiation under a total bit budget."""

    def __init__(self, bit_budget: int = DEFAULT_ORACLE_BIT_BUDGET):
        self.bit_budget = bit_budget

    @staticmethod
    def _bits(base: Coefficient, exponent: int) -> int:
        if base in (0, 1, -1):
            return 1
        return exponent * (base.numerator.bit_length() + base.denominator.bit_length())

    def decide_zero(self, rows: Sequence[Sequence[tuple[Coefficient, int]]]) -> bool:
        cost = sum(self._bits(base, e) for row in rows for base, e in row)
        if cost > self.bit_budget:
            raise OracleRefusal(
                f"oracle incomplete: power sum needs about {cost} bits, "
                f"budget is {self.bit_budget}"
            )
        total: Coefficient = 0
        for row in rows:
            prod: Coefficient = 1
            for base, e in row:
                if e < 0:
                    raise ValueError("exponents must be nonnegative")
                prod *= base**e
                if prod == 0:
                    break
            total += prod
        return total == 0


def exact_power_sum_oracle(bit_budget: int = DEFAULT_ORACLE_BIT_BUDGET) -> PowerSumOracle:
    return ExactPowerSumOracle(bit_budget)


# ---------------------------------------------------------------------------
# multivariate expressions and the Kronecker reduction


class MultivariateSparsePoly:
    """Immutable sparse polynomial in ``nvars`` variables, exact coefficients."""

    __slots__ = ("nvars", "_terms")

    def __init__(
        self,
        nvars: int,
        terms: Union[Mapping[tuple[int, ...], Coefficient], Iterable[tuple[tuple[int, ...], Coefficient]]] = (),
    ):
        if nvars < 1:
            raise ValueError("need at least one variable")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, ...], Coefficient] = {}
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"expected {nvars} exponents, got {len(exps)}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = acc.get(exps, 0) + coeff
            if c:
                acc[exps] = c
            else:
                acc.pop(exps, None)
        self.nvars = nvars
        self._terms: tuple[tuple[tuple[int, ...], Coefficient], ...] = tuple(
            (e, normalize_coeff(c)) for e, c in sorted(acc.items())
        )

    @classmethod
    def constant(cls, nvars: int, value: Coefficient) -> "MultivariateSparsePoly":
        return cls(nvars, {(0,) * nvars: value})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def sparsity(self) -> int:
        return len(self._terms)

    def items(self) -> tuple[tuple[tuple[int, ...], Coefficient], ...]:
        return self._terms

    def total_degree(self) -> int | None:
        if not self._terms:
            return None
        return max(sum(e) for e, _ in self._terms)

    def __add__(self, other: "MultivariateSparsePoly") -> "MultivariateSparsePoly":
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")
        acc = dict(self._terms)
        for e, c in other._terms:
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            else:
                del acc[e]
        return MultivariateSparsePoly(self.nvars, acc)

    def __neg__(self) -> "MultivariateSparsePoly":
        return MultivariateSparsePoly(self.nvars, [(e, -c) for e, c in self._terms])

    def __sub__(self, other: "MultivariateSparsePoly") -> "MultivariateSparsePoly":
        return self + (-other)

    def __mul__(self, other: "MultivariateSparsePoly") -> "MultivariateSparsePoly":
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")
        acc: dict[tuple[int, ...], Coefficient] = {}
        for ea, ca in self._terms:
            for eb, cb in other._terms:
                e = tuple(x + y for x, y in zip(ea, eb))
                s = acc.get(e, 0) + ca * cb
                if s:
                    acc[e] = s
                else:
                    del acc[e]
        return MultivariateSparsePoly(self.nvars, acc)

    def __pow__(self, exponent: int) -> "MultivariateSparsePoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("powers must be nonnegative integers")
        result = MultivariateSparsePoly.constant(self.nvars, 1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def substitute_powers(self, weights: Sequence[int]) -> SparsePoly:
        """Map each variable i to X**weights[i]; a ring homomorphism to one variable."""
        if len(weights) != self.nvars:
            raise ValueError("need one weight per variable")
        acc: dict[int, Coefficient] = {}
        for exps, coeff in self._terms:
            e = sum(x * w for x, w in zip(exps, weights))
            s = acc.get(e, 0) + coeff
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
        return SparsePoly(acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultivariateSparsePoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.nvars, self._terms))

    def __repr__(self) -> str:
        return f"MultivariateSparsePoly(nvars={self.nvars}, terms={self._terms!r})"


@dataclass(frozen=True)
class MvTermSpec:
    alphas: tuple[int, ...]
    g: MultivariateSparsePoly | None = None  # None means the constant 1

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(self.alphas))


@dataclass(frozen=True)
class MvSpsExpression:
    """Multivariate counterpart of SpsExpression, used only as Kronecker input."""

    nvars: int
    factors: tuple[MultivariateSparsePoly, ...]
    terms: tuple[MvTermSpec, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        object.__setattr__(self, "terms", tuple(self.terms))

    def term_multiplier(self, i: int) -> MultivariateSparsePoly:
        g = self.terms[i].g
        return g if g is not None else MultivariateSparsePoly.constant(self.nvars, 1)


def validate_multivariate(expr: MvSpsExpression) -> list[str]:
    violations = []
    if len(expr.factors) < 1:
        violations.append("expression has no factors")
    if len(expr.terms) < 1:
        violations.append("expression has no terms")
    for j, f in enumerate(expr.factors, start=1):
        if f.is_zero:
            violations.append(f"factor {j} is the zero polynomial")
        if f.nvars != expr.nvars:
            violations.append(f"factor {j}: expected {expr.nvars} variables, got {f.nvars}")
    for i, term in enumerate(expr.terms, start=1):
        if len(term.alphas) != len(expr.factors):
            violations.append(
                f"term {i}: expected {len(expr.factors)} exponents, got {len(term.alphas)}"
            )
        for j, a in enumerate(term.alphas, start=1):
            if a < 0:
                violations.append(f"term {i}: exponent {j} is negative")
        if term.g is not None and term.g.nvars != expr.nvars:
            violations.append(f"term {i}: multiplier has {term.g.nvars} variables")
    return violations


def safe_kronecker_degree(expr: MvSpsExpression) -> int:
    """Smallest total-degree bound the reduction accepts.

    Covers the expanded expression (per term, deg g + sum alpha * deg f) and
    every individual factor, so no factor image can collapse.
    """
    best = 0
    for j, f in enumerate(expr.factors):
        d = f.total_degree()
        if d is not None:
            best = max(best, d)
    for i, term in enumerate(expr.terms):
        g = expr.term_multiplier(i)
        dg = g.total_degree()
        if dg is None:
            continue
        total = dg
        for a, f in zip(term.alphas, expr.factors):
            fd = f.total_degree()
            total += a * (fd if fd is not None else 0)
        best = max(best, total)
    return best


def kronecker_reduce(expr: MvSpsExpression, degree_bound: int | None = None) -> SpsExpression:
    """Collapse a multivariate expression to one variable, zero-ness preserved.

    Variable i maps to X**((d+1)**i) with d the degree bound; the exponent
    matrix is untouched.  ``degree_bound`` may only raise the computed safe
    bound, never undercut it.
    """
    violations = validate_multivariate(expr)
    if violations:
        raise InvalidExpressionError(violations)
    safe = safe_kronecker_degree(expr)
    d = safe if degree_bound is None else degree_bound
    if d < safe:
        raise ValueError(f"degree bound too small: need at least {safe}, got {d}")
    weights = [(d + 1) ** i for i in range(1, expr.nvars + 1)]
    factors = tuple(f.substitute_powers(weights) for f in expr.factors)
    terms = tuple(
        TermSpec(term.alphas, expr.term_multiplier(i).substitute_powers(weights))
        for i, term in enumerate(expr.terms)
    )
    return SpsExpression(factors=factors, terms=terms)
