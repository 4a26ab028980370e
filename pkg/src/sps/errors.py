"""Exception types shared across the package.

Refusals (cap and budget errors) are deliberate, recoverable outcomes: a
computation declines to run because it would exceed a configured resource
limit, never because the answer is unknown.  Callers that can degrade
gracefully catch :class:`CapExceeded` / :class:`OracleRefusal`; everything
else is a genuine usage error.
"""

from __future__ import annotations


class InvalidExpressionError(ValueError):
    """An expression failed structural validation.

    Carries the full list of human-readable violations.
    """

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class ExpressionFormatError(ValueError):
    """A JSON expression file could not be parsed.

    The message names the offending JSON path, e.g. ``terms[1].alphas[0]``.
    """


class CapExceeded(RuntimeError):
    """Base class for size-limit refusals."""


class ExpansionCapExceeded(CapExceeded):
    """Expanding an expression would exceed the sparsity cap."""


class SturmCapExceeded(CapExceeded):
    """A polynomial's degree exceeds the dense-arithmetic cap."""


class SumsetCapExceeded(CapExceeded):
    """An iterated sumset would exceed the cardinality cap."""


class EvaluationBudgetExceeded(CapExceeded):
    """Evaluating at a point would exceed the exponentiation bit budget."""


class OracleRefusal(RuntimeError):
    """The power-sum oracle declined to answer (oracle incomplete)."""
