"""Root-bound formulas, sumsets, and the combined report."""

import random

import pytest

from sps import (
    SparsePoly,
    SpsExpression,
    SumsetCapExceeded,
    TermSpec,
    binomial_sumset_bound,
    descartes_bound,
    evaluate_bounds,
    h_bound_naive,
    naive_bound,
    sps1_bound,
    sumset_power,
    support_base_set,
    support_bound,
    support_bound_exact,
)

P = SparsePoly


def test_descartes_bound_values():
    assert descartes_bound(1) == 1
    assert descartes_bound(2) == 3
    assert descartes_bound(4) == 7
    with pytest.raises(ValueError):
        descartes_bound(0)


def test_sps1_bound_values():
    assert sps1_bound(1, 1, 1) == 1
    assert sps1_bound(2, 1, 3) == 7
    assert sps1_bound(1, 2, 2) == 5
    with pytest.raises(ValueError):
        sps1_bound(0, 1, 1)


def test_h_bound_naive_values():
    assert h_bound_naive(1, 1, 1) == 1
    assert h_bound_naive(1, 3, 5) == 1
    assert h_bound_naive(2, 1, 2) == 6
    assert h_bound_naive(3, 2, 2) == 16**3
    with pytest.raises(ValueError):
        h_bound_naive(0, 1, 1)


def test_naive_bound_values():
    assert naive_bound(1, 1, 1) == 1
    assert naive_bound(2, 1, 2) == 20
    assert naive_bound(2, 2, 2) == 46
    with pytest.raises(ValueError):
        naive_bound(1, 0, 1)


def test_support_base_set_examples():
    e1 = SpsExpression((P({1: 1, 0: 1}),), (TermSpec((1,)),))
    assert support_base_set(e1) == {-1, 0}
    e2 = SpsExpression((P({1: 1, 0: 1}), P({2: 1, 0: 1})), (TermSpec((1, 1)),))
    assert support_base_set(e2) == {-1, 0, 1, 2}
    e3 = SpsExpression((P({3: 1}),), (TermSpec((1,)),))
    assert support_base_set(e3) == {2}


def test_sumset_power_examples():
    assert sumset_power({0, 1}, 2) == {0, 1, 2}
    assert sumset_power({0, 3}, 2) == {0, 3, 6}
    assert sumset_power({5, 9}, 0) == {0}
    assert sumset_power(set(), 3) == frozenset()
    assert sumset_power({-4}, 3) == {-12}
    with pytest.raises(ValueError):
        sumset_power({1}, -1)


def test_sumset_power_cap_refusal():
    with pytest.raises(SumsetCapExceeded):
        sumset_power(set(range(50)), 5, cap=100)


def test_sumset_cap_env_override(monkeypatch):
    monkeypatch.setenv("SPS_MAX_SUMSET", "10")
    with pytest.raises(SumsetCapExceeded):
        sumset_power(set(range(12)), 2)


def test_binomial_sumset_bound_values():
    assert binomial_sumset_bound(2, 2) == 6
    assert len(sumset_power({0, 1}, 2)) == 3 <= 6
    assert binomial_sumset_bound(1, 5) == 6
    assert binomial_sumset_bound(0, 3) == 1
    with pytest.raises(ValueError):
        binomial_sumset_bound(2, 0)


def test_binomial_bound_holds_on_random_sets():
    rng = random.Random(4242)
    for _ in range(300):
        size = rng.randint(1, 6)
        s = set(rng.sample(range(-30, 31), size))
        p = rng.randint(1, 6)
        assert len(sumset_power(s, p)) <= binomial_sumset_bound(len(s), p)


def test_far_apart_sets_attain_multiset_count():
    # s_{n+1} > p * s_n makes all p-element multiset sums distinct
    import math

    for p in (2, 3, 4):
        for size in (2, 3, 4):
            s, x = [], 1
            for _ in range(size):
                s.append(x)
                x = p * x + 1
            assert len(sumset_power(set(s), p)) == math.comb(p + size - 1, p)


def test_support_bound_formula():
    assert support_bound(2, 1, 2) == 14
    assert support_bound(2, 1, 2) <= naive_bound(2, 1, 2)
    assert support_bound(1, 2, 5) == sps1_bound(1, 2, 5)


def test_support_bound_exact_uses_true_base_set():
    f1, f2 = P({1: 1, 0: 1}), P({2: 1, 0: 1})
    expr = SpsExpression((f1, f2), (TermSpec((1, 0)), TermSpec((0, 1))))
    report = evaluate_bounds(expr)
    assert report.support_set_size == 4
    assert binomial_sumset_bound(4, 1) == 5
    # exact level sets are sharper than the binomial count
    assert report.h_sequence_support == [1, 4]
    assert report.exact_sumset_sizes == [1, 4]
    assert support_bound_exact(expr) == report.support_bound


def test_evaluate_bounds_k1():
    expr = SpsExpression((P({2: 1, 0: -3}),), (TermSpec((5,)),))
    report = evaluate_bounds(expr)
    assert report.descartes == descartes_bound(1) + descartes_bound(2)
    assert report.sps1_bound == sps1_bound(1, 1, 2)
    assert report.support_bound == report.sps1_bound
    assert report.naive_bound == report.sps1_bound


def test_evaluate_bounds_k2_example_shape():
    expr = SpsExpression((P({1: 1, 0: 1}),), (TermSpec((3,)), TermSpec((1,))))
    report = evaluate_bounds(expr)
    assert report.naive_bound == naive_bound(2, 1, 2) == 20
    assert report.support_bound <= support_bound(2, 1, 2) == 14
    assert report.descartes is None
    assert report.flags == []


def test_alpha_independence():
    f = (P({3: 2, 0: 1}), P({1: 1, 0: 4}))
    small = SpsExpression(f, (TermSpec((1, 2)), TermSpec((0, 1), P({1: 5}))))
    huge = SpsExpression(
        f, (TermSpec((10**30, 2)), TermSpec((0, 10**18), P({1: 5})))
    )
    assert evaluate_bounds(small) == evaluate_bounds(huge)


def test_cap_fallback_sets_flag():
    factors = tuple(P({i + 1: 1, 0: 1}) for i in range(3))
    expr = SpsExpression(factors, (TermSpec((1, 1, 1)), TermSpec((2, 0, 0)), TermSpec((0, 0, 3))))
    report = evaluate_bounds(expr, cap=2)
    assert "sumset cap exceeded" in report.flags
    assert report.exact_sumset_sizes is None
    # fallback values still bound the exact ones computed without a cap
    exact = evaluate_bounds(expr).h_sequence_support
    assert all(a >= b for a, b in zip(report.h_sequence_support, exact))


def test_exact_sumsets_opt_out():
    expr = SpsExpression((P({1: 1, 0: 1}),), (TermSpec((3,)), TermSpec((1,))))
    report = evaluate_bounds(expr, exact_sumsets=False)
    assert report.exact_sumset_sizes is None
    assert report.flags == []
    assert report.h_sequence_support == [1, binomial_sumset_bound(2, 1)]


def test_all_bounds_nonnegative_on_random_instances():
    from gen import rand_expression

    rng = random.Random(5150)
    for _ in range(200):
        expr = rand_expression(rng, max_k=4, max_m=3, max_t=4, max_alpha=6)
        report = evaluate_bounds(expr)
        assert report.naive_bound >= 0
        assert report.support_bound >= 0
        assert report.sps1_bound >= 0
        assert all(h >= 1 for h in report.h_sequence_naive)
        assert all(h >= 1 for h in report.h_sequence_support)


def test_actual_sparsities_stay_under_bounds():
    from gen import rand_expression
    from sps import elimination_sequence

    rng = random.Random(5151)
    for _ in range(150):
        expr = rand_expression(rng, max_k=3, max_m=2, max_t=3, max_alpha=4, max_exp=3)
        states = elimination_sequence(expr)
        report = evaluate_bounds(expr, level_states=states)
        actual = report.actual_h_sequence
        assert actual is not None and len(actual) == len(states)
        for n, h in enumerate(actual):
            assert h <= report.h_sequence_naive[n]
            assert h <= report.h_sequence_support[n]
