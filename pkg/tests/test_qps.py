import math
import random

import pytest
from hypothesis import given
import hypothesis.strategies as st

from eulercc.euler import MassTriple, count_cell, degenerate_family, eval_g
from eulercc.qps import (
    AffineConstraint,
    BivariateSignomial,
    count_on_line,
    euler_line_system,
    khovanskii_bound,
    restrict_to_line,
    straight_bound,
)


def test_straight_bound_values():
    assert straight_bound(6) == 62
    assert straight_bound(3) == 6
    assert straight_bound(1) == 0
    with pytest.raises(ValueError):
        straight_bound(0)


def test_khovanskii_bound_values():
    assert khovanskii_bound(1, 2, 4) == 32768
    assert khovanskii_bound(1, 1, 6) == 3 ** 6 * 2 ** 15
    assert khovanskii_bound(1, 1, 0) == 1
    with pytest.raises(ValueError):
        khovanskii_bound(0, 1, 1)
    with pytest.raises(ValueError):
        khovanskii_bound(1, 1, -1)


@given(st.integers(1, 12), st.integers(1, 6), st.integers(1, 6), st.integers(0, 5))
def test_bounds_monotone(n, d1, d2, k):
    assert straight_bound(n + 1) > straight_bound(n)
    assert khovanskii_bound(d1 + 1, d2, k) >= khovanskii_bound(d1, d2, k)
    assert khovanskii_bound(d1, d2 + 1, k) >= khovanskii_bound(d1, d2, k)
    assert khovanskii_bound(d1, d2, k + 1) >= khovanskii_bound(d1, d2, k)


def test_constraint_rejects_zero_a2():
    with pytest.raises(ValueError):
        AffineConstraint(1.0, 0.0)


def test_restrict_product_to_segment():
    f = BivariateSignomial.from_triples([(1.0, 1.0, 1.0)])  # x*y
    r, (lo, hi) = restrict_to_line(f, AffineConstraint(1.0, 1.0))
    assert (lo, hi) == (0.0, 1.0)
    for x in (0.1, 0.5, 0.9):
        assert r(x) == pytest.approx(x * (1 - x), rel=1e-15)


def test_restrict_constraint_absorbs_equation():
    f = BivariateSignomial.from_triples([(1.0, 0.0, 1.0), (-1.0, 0.0, 0.0)])  # y - 1
    r, (lo, hi) = restrict_to_line(f, AffineConstraint(0.0, 1.0))
    assert (lo, hi) == (0.0, math.inf)
    assert r(3.7) == 0.0


def test_restrict_empty_domain():
    with pytest.raises(ValueError):
        restrict_to_line(BivariateSignomial.from_triples([(1, 1, 0)]),
                         AffineConstraint(-1.0, -1.0))


def test_bivariate_normalization_merges_duplicates():
    f = BivariateSignomial.from_triples([(1, 2, 3), (2, 2, 3), (-3, 2, 3)])
    assert f.terms == ()
    f = BivariateSignomial.from_triples([(1, 0, 0), (0.0, 1, 1)])
    assert f.terms == ((1.0, 0.0, 0.0),)


def test_balance_system_restriction_reproduces_g():
    rng = random.Random(40)
    for _ in range(50):
        m = MassTriple(rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-4, 4))
        b = rng.uniform(-3, 3)
        f, c = euler_line_system(*m.as_tuple(), b)
        r, dom = restrict_to_line(f, c)
        assert dom == (0.0, math.inf)
        s = rng.uniform(0.05, 20.0)
        gv = eval_g(m, b, s)
        assert abs(r(s) - gv) <= 1e-12 * max(1.0, abs(gv), abs(r(s)))


def test_count_on_line_gravitational_symmetric():
    f, c = euler_line_system(1.0, 1.0, 1.0, -2.0)
    res = count_on_line(f, c, cap=1)
    assert res.count == 1
    assert res.roots[0].value == pytest.approx(1.0, rel=1e-9)
    assert res.certified
    assert "cap" in res.note


def test_count_on_line_three_roots():
    f, c = euler_line_system(1.0, -1.2, 1.0, -2.0)
    res = count_on_line(f, c)
    assert res.count == 3
    assert not res.certified


def test_count_on_line_constant_restriction():
    f = BivariateSignomial.from_triples([(1, 1, 0), (1, 0, 1), (-3, 0, 0)])  # x + y - 3
    res = count_on_line(f, AffineConstraint(1.0, 1.0))
    assert res.count == 0


def test_count_on_line_matches_cell_counter():
    rng = random.Random(41)
    checked = 0
    while checked < 15:
        m = MassTriple(rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3))
        b = rng.uniform(-3, 0.9)
        if degenerate_family(m, b):
            continue
        f, c = euler_line_system(*m.as_tuple(), b)
        assert count_on_line(f, c).count == count_cell(m, b, 2)[0]
        checked += 1


def test_json_round_trip_of_triples():
    import json
    f = BivariateSignomial.from_triples([(1.5, -2.0, 0.5), (-0.25, 0.0, 3.0)])
    text = json.dumps(f.to_triples())
    g = BivariateSignomial.from_triples(json.loads(text))
    assert g == f
