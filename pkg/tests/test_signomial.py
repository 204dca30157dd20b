import math
import random

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from eulercc.signomial import (
    IDENTICALLY_ZERO,
    Endpoint,
    Signomial,
    count_and_isolate,
    derivative,
    derivative_chain,
    evaluate,
    limit_sign,
    normalize,
    shift_and_differentiate,
    sign_variations,
)

from oracles import signomial_scan_count


def pairs(p: Signomial):
    return list(p.pairs())


# --- normalize ------------------------------------------------------------------


def test_normalize_merges_equal_exponents():
    assert pairs(normalize([(1, 2), (3, 2)])) == [(4.0, 2.0)]


def test_normalize_cancellation_gives_zero():
    p = normalize([(1, 1), (-1, 1)])
    assert p.is_zero


def test_normalize_drops_zero_coefficients_and_sorts():
    p = normalize([(0.0, 2), (2, 1), (-2, 1), (0.0, 0)])
    assert p.is_zero
    p = normalize([(3, 5), (1, -1)])
    assert pairs(p) == [(1.0, -1.0), (3.0, 5.0)]


@given(st.lists(st.tuples(st.floats(-10, 10), st.integers(-4, 4)), max_size=8))
def test_normalize_idempotent(raw):
    p = normalize(raw)
    assert normalize(p.pairs()).pairs() == p.pairs()
    exps = p.exponents()
    assert all(a < b for a, b in zip(exps, exps[1:]))
    assert all(c != 0.0 for c in p.coefficients())


# --- evaluate -------------------------------------------------------------------


def test_evaluate_simple():
    p = normalize([(1, 0.5), (-3, 1), (1, 2)])
    assert evaluate(p, 1.0) == pytest.approx(-1.0, abs=1e-15)


def test_evaluate_empty_is_zero():
    assert evaluate(normalize([]), 3.7) == 0.0


def test_evaluate_at_one_sums_coefficients():
    assert evaluate(normalize([(1, math.pi)]), 1.0) == 1.0


def test_evaluate_rejects_nonpositive():
    p = normalize([(1, 1)])
    with pytest.raises(ValueError):
        evaluate(p, 0.0)
    with pytest.raises(ValueError):
        evaluate(p, -2.0)


# --- derivative -----------------------------------------------------------------


def test_derivative_power_rule():
    assert pairs(derivative(normalize([(4, 2)]))) == [(8.0, 1.0)]
    assert derivative(normalize([(5, 0)])).is_zero
    assert pairs(derivative(normalize([(1, 0.5), (-3, 1)]))) == [(0.5, -0.5), (-3.0, 0.0)]


def test_derivative_matches_finite_differences():
    rng = random.Random(2024)
    for _ in range(50):
        n = rng.randint(1, 6)
        p = normalize([(rng.uniform(-10, 10), rng.uniform(-5, 5)) for _ in range(n)])
        if p.is_zero:
            continue
        dp = derivative(p)
        for _ in range(5):
            x = rng.uniform(0.2, 5.0)
            h = 1e-6 * x
            fd = (evaluate(p, x + h) - evaluate(p, x - h)) / (2 * h)
            want = evaluate(dp, x)
            scale = sum(abs(c) * x ** e for c, e in dp.pairs()) + abs(fd)
            assert abs(fd - want) <= 1e-6 * max(scale, 1e-12)


# --- shift_and_differentiate ------------------------------------------------------


def test_shift_one_step():
    assert pairs(shift_and_differentiate(normalize([(1, 0), (-2, 1)]), 0.0)) == [(-2.0, 0.0)]


def test_shift_single_term_annihilated():
    assert shift_and_differentiate(normalize([(2, 3)]), 3.0).is_zero


def test_shift_rejects_missing_pivot():
    with pytest.raises(ValueError):
        shift_and_differentiate(normalize([(1, 1)]), 2.0)


def test_shift_drops_exactly_one_term_any_pivot():
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(1, 6)
        p = normalize([(rng.uniform(-10, 10), rng.uniform(-5, 5)) for _ in range(n)])
        if p.is_zero:
            continue
        pivot = rng.choice(p.exponents())
        q = shift_and_differentiate(p, pivot)
        assert len(q) == len(p) - 1


def test_chain_decrements_variations_by_exactly_one():
    rng = random.Random(6)
    for _ in range(200):
        n = rng.randint(2, 6)
        p = normalize([(rng.uniform(-10, 10), rng.uniform(-5, 5)) for _ in range(n)])
        if p.is_zero:
            continue
        sv, terms = sign_variations(p), len(p)
        for _, q in derivative_chain(p):
            assert sign_variations(q) == sv - 1
            assert len(q) == terms - 1
            sv, terms = sign_variations(q), len(q)
        assert sv == 0


def test_extreme_pivots_never_increase_variations():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(2, 6)
        p = normalize([(rng.uniform(-10, 10), rng.uniform(-5, 5)) for _ in range(n)])
        if p.is_zero:
            continue
        for pivot in (p.exponents()[0], p.exponents()[-1]):
            assert sign_variations(shift_and_differentiate(p, pivot)) <= sign_variations(p)


# --- sign_variations / limit_sign --------------------------------------------------


def test_sign_variations_gravitational_quintic():
    p = normalize([(2, 0), (5, 1), (4, 2), (-4, 3), (-5, 4), (-2, 5)])
    assert sign_variations(p) == 1


def test_sign_variations_empty_and_alternating():
    assert sign_variations(normalize([])) == 0
    assert sign_variations(normalize([(1, 0), (-3, 1), (1, 2)])) == 2


def test_limit_sign_lowest_exponent_at_zero():
    p = normalize([(2, -3), (-2, -2), (-2, 1), (2, 0)])
    assert limit_sign(p, Endpoint.ZERO_PLUS) == 1
    assert limit_sign(normalize([(-3, 1), (1, 2)]), Endpoint.INFINITY) == 1
    assert limit_sign(normalize([]), Endpoint.ZERO_PLUS) == 0
    assert limit_sign(normalize([]), Endpoint.INFINITY) == 0


# --- count_and_isolate --------------------------------------------------------------


def test_count_gravitational_quintic_symmetric():
    p = normalize([(2, 0), (5, 1), (4, 2), (-4, 3), (-5, 4), (-2, 5)])
    count, roots = count_and_isolate(p)
    assert count == 1
    assert roots[0].value == pytest.approx(1.0, rel=1e-10)
    assert not roots[0].degenerate


def test_count_three_term_two_roots():
    p = normalize([(1, 0.5), (-3, 1), (1, 2)])
    count, roots = count_and_isolate(p)
    assert count == 2
    assert 0.0 < roots[0].value < 1.0
    assert 1.0 < roots[1].value < 4.0


def test_count_empty_is_identically_zero_sentinel():
    count, roots = count_and_isolate(normalize([]))
    assert count == IDENTICALLY_ZERO
    assert roots == []


def test_count_rejects_bad_interval():
    p = normalize([(1, 1)])
    with pytest.raises(ValueError):
        count_and_isolate(p, 2.0, 1.0)
    with pytest.raises(ValueError):
        count_and_isolate(p, -1.0, 1.0)


def test_nondegenerate_roots_bracket_a_sign_change():
    rng = random.Random(11)
    seen = 0
    while seen < 60:
        n = rng.randint(2, 6)
        p = normalize([(rng.uniform(-10, 10), rng.uniform(-4, 4)) for _ in range(n)])
        if p.is_zero:
            continue
        _, roots = count_and_isolate(p, 1e-6, 1e6)
        for r in roots:
            if not r.degenerate:
                assert evaluate(p, r.lo) * evaluate(p, r.hi) < 0.0
                seen += 1


def test_count_bounded_by_variations_and_terms():
    rng = random.Random(12)
    for _ in range(200):
        n = rng.randint(1, 6)
        exps = sorted(rng.uniform(-5, 5) for _ in range(n))
        if n > 1 and min(b - a for a, b in zip(exps, exps[1:])) < 1e-3:
            continue
        p = normalize([(rng.uniform(-10, 10), e) for e in exps])
        if p.is_zero:
            continue
        count, roots = count_and_isolate(p)
        assert count <= sign_variations(p)
        assert count <= len(p) - 1
        # at the term-count maximum every root must be non-degenerate
        if len(p) >= 2 and count == len(p) - 1:
            assert not any(r.degenerate for r in roots)


def test_count_agrees_with_dense_scan_on_window():
    # well-separated exponents keep every root inside the scan window
    rng = random.Random(13)
    for _ in range(60):
        n = rng.randint(2, 5)
        exps = sorted(rng.uniform(-4, 4) for _ in range(n))
        if min(b - a for a, b in zip(exps, exps[1:])) < 0.5:
            continue
        p = normalize([(rng.uniform(-9, 9) or 1.0, e) for e in exps])
        if p.is_zero:
            continue
        count, _ = count_and_isolate(p, 1e-6, 1e6)
        import numpy as np
        assert count == signomial_scan_count(p.pairs(), np.linspace(-6, 6, 200_001))


def test_subinterval_counts_are_consistent():
    p = normalize([(1, 0.5), (-3, 1), (1, 2)])
    in_left, _ = count_and_isolate(p, 0.0, 1.0)
    in_right, _ = count_and_isolate(p, 1.0, math.inf)
    assert (in_left, in_right) == (1, 1)


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 5), st.integers(0, 10 ** 6))
def test_isolation_windows_are_disjoint_and_sorted(n, seed):
    rng = random.Random(seed)
    exps = sorted(rng.uniform(-4, 4) for _ in range(n))
    if min(b - a for a, b in zip(exps, exps[1:])) < 1e-2:
        return
    p = normalize([(rng.uniform(-10, 10), e) for e in exps])
    if p.is_zero:
        return
    _, roots = count_and_isolate(p, 1e-6, 1e6)
    for a, b in zip(roots, roots[1:]):
        assert a.value < b.value
        assert a.hi <= b.lo or a.degenerate or b.degenerate
    for r in roots:
        assert r.lo < r.value < r.hi or r.lo == r.hi == r.value
