"""Exact arithmetic for sums of products of sparse univariate polynomials.

The package models expressions of the form

    sum(i = 1..k)  g_i(X) * prod(j = 1..m) f_j(X) ** alpha_ij

with exact rational coefficients and arbitrarily large integer exponents,
and provides

* a term-elimination transformation that trades one summand for more
  complicated multipliers (``eliminate_term`` / ``elimination_sequence``);
* upper bounds on the number of distinct real roots driven by that
  transformation (``evaluate_bounds`` and the individual formulas);
* a deterministic polynomial identity test that never expands powers
  (``pit_decide``), an oracle-based variant, and a Kronecker reduction
  from multivariate inputs;
* independent brute-force checks: full expansion, exact Sturm root
  counting, and random evaluation (``sps.verify``).

The command line front end lives in ``sps.cli`` (entry point ``sps``).
"""

from .bounds import (
    BoundReport,
    binomial_sumset_bound,
    descartes_bound,
    evaluate_bounds,
    h_bound_naive,
    naive_bound,
    sps1_bound,
    sumset,
    sumset_power,
    support_base_set,
    support_bound,
    support_bound_exact,
)
from .errors import (
    CapExceeded,
    EvaluationBudgetExceeded,
    ExpansionCapExceeded,
    ExpressionFormatError,
    InvalidExpressionError,
    OracleRefusal,
    SturmCapExceeded,
    SumsetCapExceeded,
)
from .expression import (
    ActiveTerm,
    LevelState,
    SpsExpression,
    TermSpec,
    choose_pivot,
    elimination_sequence,
    eliminate_term,
    initial_level,
    pivot_position,
    term_degree,
    term_leading_coeff,
    validate_expression,
)
from .pit import (
    ExactPowerSumOracle,
    MultivariateSparsePoly,
    MvSpsExpression,
    MvTermSpec,
    PitLevelCheck,
    PitTrace,
    PitVerdict,
    PowerSumOracle,
    exact_power_sum_oracle,
    kronecker_reduce,
    pit_decide,
    pit_decide_with_oracle,
    safe_kronecker_degree,
    validate_multivariate,
)
from .sparsepoly import ONE, X, ZERO, Coefficient, Monomial, SparsePoly
from .verify import (
    RootCount,
    check_transform_identity,
    expand_expression,
    expand_level,
    expand_multivariate,
    positive_root_count,
    random_eval_check,
    squarefree_part,
    sturm_count,
    wilkinson_product,
)

__version__ = "0.1.0"
