"""Seeded random instance generators shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction

from sps import (
    MultivariateSparsePoly,
    MvSpsExpression,
    MvTermSpec,
    SparsePoly,
    SpsExpression,
    TermSpec,
)

ONE = SparsePoly({0: 1})
MINUS_ONE = SparsePoly({0: -1})


def rand_coeff(rng: random.Random, max_abs: int = 10, allow_fraction: bool = False):
    c = 0
    while c == 0:
        c = rng.randint(-max_abs, max_abs)
    if allow_fraction and rng.random() < 0.25:
        return Fraction(c, rng.randint(2, 6))
    return c


def rand_poly(
    rng: random.Random,
    max_sparsity: int = 5,
    max_exp: int = 4,
    max_abs: int = 10,
    allow_fraction: bool = False,
) -> SparsePoly:
    t = rng.randint(1, max_sparsity)
    exps = rng.sample(range(max_exp + 1), min(t, max_exp + 1))
    return SparsePoly({e: rand_coeff(rng, max_abs, allow_fraction) for e in exps})


def rand_expression(
    rng: random.Random,
    max_k: int = 4,
    max_m: int = 3,
    max_t: int = 5,
    max_alpha: int = 8,
    max_exp: int = 4,
    g_mode: str = "mixed",
) -> SpsExpression:
    """Random expression within the given shape caps.

    ``g_mode``: "ones" forces all multipliers to 1, "mixed" keeps most of
    them 1, "general" always draws a random multiplier.
    """
    m = rng.randint(1, max_m)
    factors = tuple(rand_poly(rng, max_t, max_exp) for _ in range(m))
    k = rng.randint(1, max_k)
    terms = []
    for _ in range(k):
        alphas = tuple(rng.randint(0, max_alpha) for _ in range(m))
        if g_mode == "ones" or (g_mode == "mixed" and rng.random() < 0.6):
            g = ONE
        else:
            g = rand_poly(rng, 3, 3)
        terms.append(TermSpec(alphas, g))
    return SpsExpression(factors, tuple(terms))


def planted_zero(rng: random.Random, max_alpha: int = 8) -> SpsExpression:
    """An expression that is identically zero by construction.

    Styles: splitting a power across a duplicated factor, matching a factor
    against its negation, cancelling multipliers over a shared exponent row,
    and writing f**(2a) against an explicit f**2 factor.
    """
    style = rng.randrange(4)
    if style == 0:
        f = rand_poly(rng, 3, 3)
        a = rng.randint(0, max_alpha // 2)
        b = rng.randint(0, max_alpha - a)
        factors: tuple[SparsePoly, ...] = (f, f)
        terms = (TermSpec((a + b, 0)), TermSpec((a, b), MINUS_ONE))
    elif style == 1:
        f = rand_poly(rng, 3, 3)
        e = 2 * rng.randint(0, (max_alpha - 1) // 2)
        factors = (f, -f)
        if rng.random() < 0.5:
            e += 1
            terms = (TermSpec((e, 0)), TermSpec((0, e)))
        else:
            terms = (TermSpec((e, 0)), TermSpec((0, e), MINUS_ONE))
    elif style == 2:
        m = rng.randint(1, 2)
        factors = tuple(rand_poly(rng, 3, 3) for _ in range(m))
        alphas = tuple(rng.randint(0, max_alpha) for _ in range(m))
        k = rng.randint(1, 3)
        gs = [rand_poly(rng, 2, 3) for _ in range(k)]
        total = SparsePoly()
        for g in gs:
            total = total + g
        terms = tuple([TermSpec(alphas, g) for g in gs] + [TermSpec(alphas, -total)])
    else:
        f = rand_poly(rng, 2, 3)
        a = rng.randint(0, max_alpha // 2)
        factors = (f, f * f)
        terms = (TermSpec((2 * a, 0)), TermSpec((0, a), MINUS_ONE))
    expr = SpsExpression(factors, terms)
    if rng.random() < 0.3:
        # scaling every multiplier by a common polynomial keeps the sum zero
        q = rand_poly(rng, 2, 2)
        expr = SpsExpression(
            expr.factors, tuple(TermSpec(t.alphas, q * t.g) for t in expr.terms)
        )
    return expr


def rand_mv_poly(
    rng: random.Random, nvars: int, max_sparsity: int = 3, max_exp: int = 2
) -> MultivariateSparsePoly:
    t = rng.randint(1, max_sparsity)
    terms = {}
    for _ in range(t):
        exps = tuple(rng.randint(0, max_exp) for _ in range(nvars))
        terms[exps] = rand_coeff(rng, 6)
    return MultivariateSparsePoly(nvars, terms)


def rand_mv_expression(
    rng: random.Random, max_vars: int = 3, max_alpha: int = 4
) -> MvSpsExpression:
    nvars = rng.randint(2, max_vars)
    m = rng.randint(1, 2)
    factors = tuple(rand_mv_poly(rng, nvars) for _ in range(m))
    k = rng.randint(1, 3)
    terms = []
    for _ in range(k):
        alphas = tuple(rng.randint(0, max_alpha) for _ in range(m))
        g = rand_mv_poly(rng, nvars, 2, 1) if rng.random() < 0.3 else None
        terms.append(MvTermSpec(alphas, g))
    return MvSpsExpression(nvars, factors, tuple(terms))


def planted_zero_mv(rng: random.Random, max_vars: int = 3, max_alpha: int = 4) -> MvSpsExpression:
    nvars = rng.randint(2, max_vars)
    f = rand_mv_poly(rng, nvars)
    style = rng.randrange(3)
    if style == 0:
        a = rng.randint(0, max_alpha // 2)
        b = rng.randint(0, max_alpha - a)
        return MvSpsExpression(
            nvars,
            (f, f),
            (
                MvTermSpec((a + b, 0)),
                MvTermSpec((a, b), MultivariateSparsePoly.constant(nvars, -1)),
            ),
        )
    if style == 1:
        e = 2 * rng.randint(0, (max_alpha - 1) // 2)
        if rng.random() < 0.5:
            e += 1
            return MvSpsExpression(nvars, (f, -f), (MvTermSpec((e, 0)), MvTermSpec((0, e))))
        return MvSpsExpression(
            nvars,
            (f, -f),
            (MvTermSpec((e, 0)), MvTermSpec((0, e), MultivariateSparsePoly.constant(nvars, -1))),
        )
    alphas = (rng.randint(0, max_alpha),)
    g1 = rand_mv_poly(rng, nvars, 2, 1)
    g2 = rand_mv_poly(rng, nvars, 2, 1)
    return MvSpsExpression(
        nvars,
        (f,),
        (MvTermSpec(alphas, g1), MvTermSpec(alphas, g2), MvTermSpec(alphas, -(g1 + g2))),
    )
