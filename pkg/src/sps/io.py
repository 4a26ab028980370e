"""JSON expression files: parsing, canonical serialization and digests.

All numeric fields travel as decimal strings so arbitrary-precision values
survive JSON untouched.  A document looks like

    {
      "variables": ["x"],
      "factors": [
        {"monomials": [{"coeff": "1", "exponents": ["1"]},
                       {"coeff": "-3/2", "exponents": ["0"]}]}
      ],
      "terms": [
        {"alphas": ["5"]},
        {"alphas": ["0"], "g": {"monomials": [{"coeff": "-1", "exponents": ["0"]}]}}
      ]
    }

One variable means a univariate expression; more mean a multivariate one
destined for the Kronecker reduction.  Parse errors name the JSON path of
the offending field.  Digests are computed on the canonical serialization
of the parsed expression, so formatting and key order never change them.
"""

from __future__ import annotations

import hashlib
import json
import re
from fractions import Fraction
from typing import Any

from .errors import ExpressionFormatError
from .expression import SpsExpression, TermSpec
from .pit import MultivariateSparsePoly, MvSpsExpression, MvTermSpec
from .sparsepoly import Coefficient, SparsePoly

__all__ = [
    "parse_document",
    "parse_file",
    "expression_to_document",
    "canonical_digest",
    "format_coeff",
]

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")
_INTEGER_RE = re.compile(r"^\d+$")


def _fail(path: str, message: str) -> None:
    raise ExpressionFormatError(f"{path}: {message}")


def _parse_coeff(raw: Any, path: str) -> Coefficient:
    if not isinstance(raw, str) or not _RATIONAL_RE.match(raw):
        _fail(path, f"expected a rational string like '3' or '-3/2', got {raw!r}")
    if "/" in raw:
        num, den = raw.split("/")
        return Fraction(int(num), int(den))
    return int(raw)


def _parse_exponent(raw: Any, path: str) -> int:
    if not isinstance(raw, str) or not _INTEGER_RE.match(raw):
        _fail(path, f"expected a nonnegative integer string, got {raw!r}")
    return int(raw)


def _parse_poly(raw: Any, nvars: int, path: str):
    if not isinstance(raw, dict):
        _fail(path, "expected an object with a 'monomials' list")
    monomials = raw.get("monomials")
    if not isinstance(monomials, list):
        _fail(f"{path}.monomials", "expected a list")
    pairs = []
    for i, mono in enumerate(monomials):
        mpath = f"{path}.monomials[{i}]"
        if not isinstance(mono, dict):
            _fail(mpath, "expected an object")
        coeff = _parse_coeff(mono.get("coeff"), f"{mpath}.coeff")
        exps = mono.get("exponents")
        if not isinstance(exps, list) or len(exps) != nvars:
            _fail(f"{mpath}.exponents", f"expected a list of {nvars} exponent strings")
        exponents = tuple(
            _parse_exponent(e, f"{mpath}.exponents[{j}]") for j, e in enumerate(exps)
        )
        pairs.append((exponents, coeff))
    if nvars == 1:
        return SparsePoly([(e[0], c) for e, c in pairs])
    return MultivariateSparsePoly(nvars, pairs)


def parse_document(doc: Any) -> SpsExpression | MvSpsExpression:
    """Parse a JSON document (already loaded) into an expression."""
    if not isinstance(doc, dict):
        _fail("$", "expected a JSON object")
    variables = doc.get("variables")
    if not isinstance(variables, list) or not variables or not all(
        isinstance(v, str) and v for v in variables
    ):
        _fail("variables", "expected a nonempty list of variable names")
    nvars = len(variables)

    raw_factors = doc.get("factors")
    if not isinstance(raw_factors, list) or not raw_factors:
        _fail("factors", "expected a nonempty list of polynomials")
    factors = [_parse_poly(f, nvars, f"factors[{j}]") for j, f in enumerate(raw_factors)]

    raw_terms = doc.get("terms")
    if not isinstance(raw_terms, list) or not raw_terms:
        _fail("terms", "expected a nonempty list of terms")
    terms = []
    for i, raw_term in enumerate(raw_terms):
        tpath = f"terms[{i}]"
        if not isinstance(raw_term, dict):
            _fail(tpath, "expected an object")
        raw_alphas = raw_term.get("alphas")
        if not isinstance(raw_alphas, list):
            _fail(f"{tpath}.alphas", "expected a list of exponent strings")
        alphas = tuple(
            _parse_exponent(a, f"{tpath}.alphas[{j}]") for j, a in enumerate(raw_alphas)
        )
        g = None
        if "g" in raw_term and raw_term["g"] is not None:
            g = _parse_poly(raw_term["g"], nvars, f"{tpath}.g")
        terms.append((alphas, g))

    if nvars == 1:
        return SpsExpression(
            factors=tuple(factors),
            terms=tuple(
                TermSpec(alphas, g if g is not None else SparsePoly.one())
                for alphas, g in terms
            ),
        )
    return MvSpsExpression(
        nvars=nvars,
        factors=tuple(factors),
        terms=tuple(MvTermSpec(alphas, g) for alphas, g in terms),
    )


def parse_file(path: str) -> SpsExpression | MvSpsExpression:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ExpressionFormatError(f"{path}: not valid JSON ({exc})") from exc
    return parse_document(doc)


def format_coeff(value: Coefficient) -> str:
    if isinstance(value, Fraction) and value.denominator != 1:
        return f"{value.numerator}/{value.denominator}"
    return str(int(value))


def _poly_to_doc(poly) -> dict:
    monomials = []
    if isinstance(poly, SparsePoly):
        items = [((e,), c) for e, c in poly.items()]
    else:
        items = list(poly.items())
    for exponents, coeff in items:
        monomials.append(
            {"coeff": format_coeff(coeff), "exponents": [str(e) for e in exponents]}
        )
    return {"monomials": monomials}


def expression_to_document(
    expr: SpsExpression | MvSpsExpression, variables: list[str] | None = None
) -> dict:
    """Canonical JSON document for an expression (monomials ascending)."""
    if isinstance(expr, SpsExpression):
        nvars = 1
        names = variables or ["x"]
        factor_docs = [_poly_to_doc(f) for f in expr.factors]
        term_docs = []
        for term in expr.terms:
            td: dict = {"alphas": [str(a) for a in term.alphas]}
            if term.g != SparsePoly.one():
                td["g"] = _poly_to_doc(term.g)
            term_docs.append(td)
    else:
        nvars = expr.nvars
        names = variables or [f"x{i}" for i in range(1, nvars + 1)]
        factor_docs = [_poly_to_doc(f) for f in expr.factors]
        term_docs = []
        for term in expr.terms:
            td = {"alphas": [str(a) for a in term.alphas]}
            if term.g is not None:
                td["g"] = _poly_to_doc(term.g)
            term_docs.append(td)
    if len(names) != nvars:
        raise ValueError(f"expected {nvars} variable names, got {len(names)}")
    return {"variables": list(names), "factors": factor_docs, "terms": term_docs}


def canonical_digest(expr: SpsExpression | MvSpsExpression) -> str:
    """sha256 over the canonical serialization (whitespace and key order immaterial)."""
    doc = expression_to_document(expr)
    blob = json.dumps(doc, sort_keys=True, separators=(",", ":")).encode("utf-8")
    return "sha256:" + hashlib.sha256(blob).hexdigest()
