"""Acceptance suite: every exit criterion at its stated size, zero tolerance.

Each test prints one summary line; run with ``pytest tests/test_acceptance.py -v -s``
to see them as they pass.  All corpora are seeded and deterministic.
"""

import math
import random
import time

import pytest

from sps import (
    ExpansionCapExceeded,
    SparsePoly,
    SpsExpression,
    TermSpec,
    binomial_sumset_bound,
    elimination_sequence,
    evaluate_bounds,
    expand_expression,
    expand_level,
    expand_multivariate,
    kronecker_reduce,
    pit_decide,
    positive_root_count,
    sturm_count,
    sumset,
    sumset_power,
    support_base_set,
    wilkinson_product,
)

from gen import (
    planted_zero,
    planted_zero_mv,
    rand_expression,
    rand_mv_expression,
    rand_poly,
)

P = SparsePoly


@pytest.fixture(scope="module")
def level_corpus():
    """1000 small expandable expressions, half with all multipliers equal to 1."""
    rng = random.Random(20250809)
    corpus = []
    for i in range(1000):
        mode = "ones" if i % 2 == 0 else "mixed"
        expr = rand_expression(
            rng, max_k=3, max_m=2, max_t=3, max_alpha=4, max_exp=3, g_mode=mode
        )
        corpus.append((expr, mode))
    return corpus


def test_criterion_1_pit_agrees_with_expansion():
    rng = random.Random(101)
    total, planted, disagreements = 0, 0, 0
    started = time.perf_counter()
    for i in range(10000):
        if i % 4 == 0:
            expr = planted_zero(rng)
            planted += 1
        else:
            expr = rand_expression(rng, max_k=4, max_m=3, max_t=5, max_alpha=8, max_exp=4)
        expected = expand_expression(expr).is_zero
        if i % 4 == 0:
            assert expected, "planted instance must expand to zero"
        if pit_decide(expr).is_zero != expected:
            disagreements += 1
        total += 1
    elapsed = time.perf_counter() - started
    assert total >= 10000 and planted >= 2000
    assert disagreements == 0
    assert elapsed < 300
    print(
        f"ACCEPTANCE 1 (identity test vs expansion): PASS, {total} instances "
        f"({planted} planted zeros), 0 disagreements, {elapsed:.1f}s"
    )


def test_criterion_2_transformation_identity(level_corpus):
    from sps import check_transform_identity, pivot_position

    steps = 0
    for expr, _ in level_corpus:
        states = elimination_sequence(expr)
        for state, nxt in zip(states, states[1:]):
            assert check_transform_identity(state, nxt, pivot_position(state))
            steps += 1
    print(
        f"ACCEPTANCE 2 (transformation identity): PASS, {len(level_corpus)} instances, "
        f"{steps} level steps, 0 failures"
    )


def test_criterion_3_sparsity_and_support_growth(level_corpus):
    ones_instances = 0
    for expr, mode in level_corpus:
        m, t = expr.m, expr.max_factor_sparsity
        base = support_base_set(expr)
        states = elimination_sequence(expr)
        for state, nxt in zip(states, states[1:]):
            h = max(term.g.sparsity for term in state.active_terms)
            union_in = frozenset()
            for term in state.active_terms:
                union_in |= term.g.support()
            allowed = sumset(sumset_power(union_in, 2), base)
            for term in nxt.active_terms:
                assert term.g.sparsity <= (m + 2) * t**m * h * h
                assert term.g.support() <= allowed
        if mode == "ones":
            ones_instances += 1
            for state in states:
                confined = sumset_power(base, 2 ** (state.level - 1) - 1)
                for term in state.active_terms:
                    assert term.g.support() <= confined
    assert ones_instances >= 400
    print(
        f"ACCEPTANCE 3 (sparsity and support growth): PASS, {len(level_corpus)} instances "
        f"({ones_instances} with unit multipliers), 0 failures"
    )


def test_criterion_4_root_bound_soundness():
    rng = random.Random(404)
    checked = 0
    while checked < 1000:
        if checked % 10 == 9:
            expr = rand_expression(rng, max_k=2, max_m=1, max_t=3, max_alpha=8, max_exp=30)
        else:
            expr = rand_expression(rng, max_k=3, max_m=2, max_t=3, max_alpha=4, max_exp=3)
        expanded = expand_expression(expr)
        if expanded.is_zero or expanded.degree > 512:
            continue
        checked += 1
        report = evaluate_bounds(expr)
        roots = sturm_count(expanded).distinct_real_roots
        assert roots <= report.naive_bound
        assert roots <= report.support_bound

        m, t = expr.m, expr.max_factor_sparsity
        states = elimination_sequence(expr)
        for state, nxt in zip(states, states[1:]):
            h = max(term.g.sparsity for term in state.active_terms)
            cur = expand_level(state)
            after = expand_level(nxt)
            r_cur = 0 if cur.is_zero else sturm_count(cur).distinct_real_roots
            r_after = 0 if after.is_zero else sturm_count(after).distinct_real_roots
            assert r_cur <= r_after + 4 * h + 4 * m * (t - 1) - 1
    print(
        f"ACCEPTANCE 4 (root-bound soundness incl. per-step inequality): PASS, "
        f"{checked} instances, 0 violations"
    )


def test_criterion_5_sign_rule():
    rng = random.Random(505)
    for _ in range(1000):
        p = rand_poly(rng, max_sparsity=8, max_exp=64, max_abs=15)
        t = p.sparsity
        assert positive_root_count(p) <= t - 1
        assert sturm_count(p).distinct_real_roots <= 2 * t - 1
    print("ACCEPTANCE 5 (sign rule on sparse polynomials): PASS, 1000 instances, 0 violations")


def test_criterion_6_sumset_counts():
    rng = random.Random(606)
    for _ in range(500):
        size = rng.randint(1, 6)
        s = set(rng.sample(range(-40, 41), size))
        p = rng.randint(1, 6)
        assert len(sumset_power(s, p)) <= binomial_sumset_bound(len(s), p)
    attained = 0
    for p in range(2, 7):
        for size in range(2, 6):
            s, x = [], 1
            for _ in range(size):
                s.append(x)
                x = p * x + 1
            assert len(sumset_power(set(s), p)) == math.comb(p + size - 1, p)
            attained += 1
    print(
        f"ACCEPTANCE 6 (sumset cardinality counts): PASS, 500 random sets, "
        f"{attained} extremal sets attain the multiset count, 0 violations"
    )


def test_criterion_7_product_fixture():
    w3 = wilkinson_product(3)
    w4 = wilkinson_product(4)
    r3 = sturm_count(w3).distinct_real_roots
    r4 = sturm_count(w4).distinct_real_roots
    assert (w3.degree, r3) == (8, 8)
    assert (w4.degree, r4) == (16, 16)
    print("ACCEPTANCE 7 (order-8 and order-16 product fixtures): PASS, 8 and 16 roots")


def test_criterion_8_powering_headroom():
    a = 10**6 + 1  # odd, so the negated factor cancels the plain power
    f = P({1: 3, 0: 1})  # non-unit leading coefficient forces real power sums
    neg_sq = -(f * f)
    dense_zero = SpsExpression((f, neg_sq), (TermSpec((2 * a, 0)), TermSpec((0, a))))

    started = time.perf_counter()
    verdict = pit_decide(dense_zero)
    elapsed = time.perf_counter() - started
    assert verdict.is_zero
    assert elapsed < 10

    with pytest.raises(ExpansionCapExceeded):
        expand_expression(dense_zero)

    # same shape over a single monomial: expansion stays trivial and agrees
    sparse_zero = SpsExpression(
        (P({1: 1}), P({2: -1})), (TermSpec((2 * a, 0)), TermSpec((0, a)))
    )
    assert pit_decide(sparse_zero).is_zero
    assert expand_expression(sparse_zero).is_zero
    print(
        f"ACCEPTANCE 8 (exponent 2e6 planted zero): PASS, verdict in {elapsed:.3f}s, "
        f"expansion refused by the size cap"
    )


def test_criterion_9_kronecker_round_trip():
    rng = random.Random(909)
    total, zeros = 0, 0
    for i in range(500):
        if i % 3 == 0:
            mv = planted_zero_mv(rng)
        else:
            mv = rand_mv_expression(rng)
        expected = expand_multivariate(mv).is_zero
        zeros += expected
        reduced = kronecker_reduce(mv)
        assert pit_decide(reduced).is_zero == expected
        total += 1
    print(
        f"ACCEPTANCE 9 (multivariate reduction): PASS, {total} instances "
        f"({zeros} identically zero), 0 disagreements"
    )
