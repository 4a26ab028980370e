"""Command-line front end.

Three subcommands, one input file each, JSON report on stdout, diagnostics
on stderr:

    sps pit FILE [--oracle exact|none] [--kronecker-degree D]
    sps bounds FILE [--exact-sumsets on|off]
    sps verify [FILE] [--seed S] [--max-expand N] [--pw n]

Exit codes are a contract: 0 means "identically zero" (or plain success for
bounds / verify), 1 means "nonzero", 2 means any error or refusal.  Every
potentially large integer is emitted as a decimal string.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .bounds import evaluate_bounds, loose_sumset_bound
from .errors import (
    CapExceeded,
    ExpansionCapExceeded,
    ExpressionFormatError,
    InvalidExpressionError,
    OracleRefusal,
    SturmCapExceeded,
)
from .expression import (
    SpsExpression,
    elimination_sequence,
    pivot_position,
    validate_expression,
)
from .io import canonical_digest, format_coeff, parse_file
from .pit import (
    MvSpsExpression,
    PitVerdict,
    exact_power_sum_oracle,
    kronecker_reduce,
    pit_decide,
    pit_decide_with_oracle,
    safe_kronecker_degree,
)
from .verify import (
    DEFAULT_EXPANSION_CAP,
    check_transform_identity,
    expand_expression,
    random_eval_check,
    sturm_count,
    wilkinson_product,
)

__all__ = ["main"]


def _emit(report: dict) -> None:
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _error(message: str) -> int:
    print(message, file=sys.stderr)
    return 2


def _trace_doc(verdict: PitVerdict) -> dict:
    trace = verdict.trace
    return {
        "final_level": trace.final_level,
        "final_is_zero": trace.final_is_zero,
        "level_checks": [
            {
                "level": c.level,
                "pivot_original_index": c.pivot_original_index,
                "active_term_count": c.active_term_count,
                "max_degree": str(c.max_degree),
                "leading_coeff_sum": None
                if c.leading_coeff_sum is None
                else format_coeff(c.leading_coeff_sum),
                "passed": c.passed,
            }
            for c in trace.level_checks
        ],
    }


def _load(path: str) -> SpsExpression | MvSpsExpression:
    expr = parse_file(path)
    violations = (
        validate_expression(expr) if isinstance(expr, SpsExpression) else []
    )
    if violations:
        raise InvalidExpressionError(violations)
    return expr


def _cmd_pit(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    try:
        expr = _load(args.file)
    except (OSError, ExpressionFormatError, InvalidExpressionError) as exc:
        return _error(str(exc))
    digest = canonical_digest(expr)
    report: dict = {"command": "pit", "input_digest": digest}
    try:
        if isinstance(expr, MvSpsExpression):
            used = (
                args.kronecker_degree
                if args.kronecker_degree is not None
                else safe_kronecker_degree(expr)
            )
            expr = kronecker_reduce(expr, args.kronecker_degree)
            report["kronecker_degree"] = str(used)
        elif args.kronecker_degree is not None:
            print("note: --kronecker-degree ignored for univariate input", file=sys.stderr)
        if args.oracle == "exact":
            verdict = pit_decide_with_oracle(expr, exact_power_sum_oracle())
        else:
            verdict = pit_decide(expr)
    except (ValueError, InvalidExpressionError, OracleRefusal) as exc:
        return _error(str(exc))
    report["verdict"] = {"is_zero": verdict.is_zero, "trace": _trace_doc(verdict)}
    report["timings_ms"] = {"total": round((time.perf_counter() - started) * 1000, 3)}
    _emit(report)
    return 0 if verdict.is_zero else 1


def _cmd_bounds(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    try:
        expr = _load(args.file)
    except (OSError, ExpressionFormatError, InvalidExpressionError) as exc:
        return _error(str(exc))
    if isinstance(expr, MvSpsExpression):
        return _error("bounds requires a univariate input (one variable)")
    try:
        bounds = evaluate_bounds(expr, exact_sumsets=(args.exact_sumsets == "on"))
    except InvalidExpressionError as exc:
        return _error(str(exc))
    doc = {
        "descartes": None if bounds.descartes is None else str(bounds.descartes),
        "sps1_bound": str(bounds.sps1_bound),
        "h_sequence_naive": [str(h) for h in bounds.h_sequence_naive],
        "naive_bound": str(bounds.naive_bound),
        "support_set_size": str(bounds.support_set_size),
        "h_sequence_support": [str(h) for h in bounds.h_sequence_support],
        "support_bound": str(bounds.support_bound),
        "exact_sumset_sizes": None
        if bounds.exact_sumset_sizes is None
        else [str(s) for s in bounds.exact_sumset_sizes],
        "h_support_loose_floats": [
            loose_sumset_bound(bounds.support_set_size, 2 ** (n - 1) - 1)
            for n in range(2, expr.k + 1)
        ],
        "flags": bounds.flags,
    }
    report = {
        "command": "bounds",
        "input_digest": canonical_digest(expr),
        "bounds": doc,
        "timings_ms": {"total": round((time.perf_counter() - started) * 1000, 3)},
    }
    _emit(report)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    if args.pw is not None:
        try:
            fixture = wilkinson_product(args.pw)
            roots = sturm_count(fixture)
        except (ValueError, CapExceeded) as exc:
            return _error(str(exc))
        report = {
            "command": "verify",
            "verify": {
                "fixture_order": str(2**args.pw),
                "degree": str(fixture.degree),
                "expanded_sparsity": str(fixture.sparsity),
                "sturm_roots": str(roots.distinct_real_roots),
            },
            "timings_ms": {"total": round((time.perf_counter() - started) * 1000, 3)},
        }
        _emit(report)
        return 0

    if args.file is None:
        return _error("verify needs an input file (or --pw N)")
    try:
        expr = _load(args.file)
    except (OSError, ExpressionFormatError, InvalidExpressionError) as exc:
        return _error(str(exc))
    digest = canonical_digest(expr)
    notes: list[str] = []
    if isinstance(expr, MvSpsExpression):
        try:
            expr = kronecker_reduce(expr)
        except (ValueError, InvalidExpressionError) as exc:
            return _error(str(exc))
        notes.append("multivariate input reduced to one variable")

    cap = args.max_expand
    result: dict = {}

    expanded = None
    try:
        expanded = expand_expression(expr, cap)
        result["expanded_sparsity"] = str(expanded.sparsity)
        result["expansion_is_zero"] = expanded.is_zero
    except ExpansionCapExceeded as exc:
        result["expanded_sparsity"] = None
        notes.append(f"expansion refused: {exc}")

    if expanded is not None and not expanded.is_zero:
        try:
            result["sturm_roots"] = str(sturm_count(expanded).distinct_real_roots)
        except SturmCapExceeded as exc:
            result["sturm_roots"] = None
            notes.append(f"root count refused: {exc}")
    else:
        result["sturm_roots"] = None
        if expanded is not None:
            notes.append("expression expanded to zero; no roots to count")

    states = elimination_sequence(expr)
    identity_checks: list[bool | None] = []
    for state, nxt in zip(states, states[1:]):
        try:
            identity_checks.append(
                check_transform_identity(state, nxt, pivot_position(state), cap)
            )
        except ExpansionCapExceeded as exc:
            identity_checks.append(None)
            notes.append(f"identity check at level {state.level} refused: {exc}")
    result["identity_checks"] = identity_checks

    verdict = pit_decide(expr)
    result["pit_is_zero"] = verdict.is_zero
    result["agreement"] = (
        None if expanded is None else expanded.is_zero == verdict.is_zero
    )

    try:
        result["random_eval_no_witness"] = random_eval_check(expr, seed=args.seed)
    except CapExceeded as exc:
        result["random_eval_no_witness"] = None
        notes.append(f"random evaluation refused: {exc}")

    if notes:
        result["notes"] = notes
    report = {
        "command": "verify",
        "input_digest": digest,
        "seed": args.seed,
        "verify": result,
        "timings_ms": {"total": round((time.perf_counter() - started) * 1000, 3)},
    }
    _emit(report)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sps",
        description="Exact tools for sums of products of sparse polynomials",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_pit = sub.add_parser("pit", help="decide whether an expression is identically zero")
    p_pit.add_argument("file", help="JSON expression file")
    p_pit.add_argument("--oracle", choices=["none", "exact"], default="none")
    p_pit.add_argument(
        "--kronecker-degree",
        type=int,
        default=None,
        help="total-degree bound for the multivariate reduction",
    )
    p_pit.set_defaults(func=_cmd_pit)

    p_bounds = sub.add_parser("bounds", help="evaluate real-root upper bounds")
    p_bounds.add_argument("file", help="JSON expression file (univariate)")
    p_bounds.add_argument("--exact-sumsets", choices=["on", "off"], default="on")
    p_bounds.set_defaults(func=_cmd_bounds)

    p_verify = sub.add_parser("verify", help="brute-force cross checks")
    p_verify.add_argument("file", nargs="?", default=None, help="JSON expression file")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--max-expand", type=int, default=DEFAULT_EXPANSION_CAP)
    p_verify.add_argument("--pw", type=int, default=None, help="check the order-2**n product fixture")
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
