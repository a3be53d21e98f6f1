from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from simplex_grid_opt import (
    GridSpec,
    GridTooLargeError,
    HomogeneousPolynomial,
    composition_count,
    enumerate_grid,
    evaluate,
    grid_maximize,
    grid_minimize,
    range_enclosures,
)
from strats import polynomials, strict_gap_poly, sum_of_squares


def test_enumerate_grid_examples():
    assert len(list(enumerate_grid(GridSpec(3, 4)))) == 15
    assert list(enumerate_grid(GridSpec(2, 2))) == [(0, 2), (1, 1), (2, 0)]
    assert list(enumerate_grid(GridSpec(1, 7))) == [(7,)]


def test_grid_spec_validation():
    with pytest.raises(ValueError):
        GridSpec(0, 3)
    with pytest.raises(ValueError):
        GridSpec(2, 0)


def test_grid_minimize_paper_values():
    f = strict_gap_poly()
    r2 = grid_minimize(f, 2)
    assert r2.value == Fraction(-1, 2)
    assert r2.minimizers == ((1, 1),)
    assert r2.tie_count == 1
    r16 = grid_minimize(f, 16)
    assert r16.value == Fraction(-17, 32)
    assert r16.minimizers == ((7, 9),)
    assert r16.evaluations == composition_count(2, 16)


def test_grid_minimize_sum_of_squares_saturates_at_one_over_r():
    assert grid_minimize(sum_of_squares(4), 2).value == Fraction(1, 2)
    for n in (3, 4, 5):
        for r in range(1, n + 1):
            assert grid_minimize(sum_of_squares(n), r).value == Fraction(1, r)


def test_grid_maximize_examples():
    res = grid_maximize(sum_of_squares(2), 2)
    assert res.value == 1
    assert res.minimizers == ((0, 2), (2, 0))
    assert res.tie_count == 2

    assert grid_maximize(HomogeneousPolynomial(2, 2, {(1, 1): 1}), 2).value == Fraction(1, 4)

    linear = HomogeneousPolynomial(2, 1, {(1, 0): 1, (0, 1): 1})
    for r in (1, 3, 8):
        assert grid_maximize(linear, r).value == 1


def test_vertex_grid_reads_min_coefficient_of_pure_powers():
    f = strict_gap_poly()
    assert grid_minimize(f, 1).value == 1  # min over vertices: min(2, 1)
    assert grid_maximize(f, 1).value == 2


def test_zero_polynomial_grid():
    z = HomogeneousPolynomial(3, 2, {})
    res = grid_minimize(z, 3)
    assert res.value == 0
    assert res.tie_count == res.evaluations == composition_count(3, 3)
    assert len(res.minimizers) == 10  # full tie set fits under the cap


def test_minimizer_cap_and_exact_tie_count():
    # (x1 + ... + x4)^2 is constant 1 on the simplex: every point ties
    n, r = 4, 5
    coeffs = {}
    for i in range(n):
        for j in range(n):
            key = tuple((i == k) + (j == k) for k in range(n))
            coeffs[key] = coeffs.get(key, 0) + 1
    f = HomogeneousPolynomial(n, 2, coeffs)
    res = grid_minimize(f, r)
    assert res.value == 1
    assert res.tie_count == composition_count(n, r) == res.evaluations
    assert len(res.minimizers) == 16
    assert list(res.minimizers) == sorted(res.minimizers)
    assert res.minimizers[0] == (0, 0, 0, r)


@settings(max_examples=25)
@given(polynomials(max_n=3, max_d=3), st.integers(1, 5))
def test_bruteforce_oracle_equality(f, r):
    # independent route: Fraction evaluation at every grid point
    expected = min(
        evaluate(f, tuple(Fraction(a, r) for a in alpha)) for alpha in enumerate_grid(GridSpec(f.n, r))
    )
    assert grid_minimize(f, r).value == expected


@settings(max_examples=20)
@given(polynomials(max_n=3, max_d=3), st.integers(1, 4), st.integers(2, 3))
def test_divisor_chain_monotonicity(f, r, mult):
    # the grid at denominator r embeds in the one at r * mult
    assert grid_minimize(f, mult * r).value <= grid_minimize(f, r).value
    assert grid_maximize(f, mult * r).value >= grid_maximize(f, r).value


@settings(max_examples=20)
@given(polynomials(max_n=3, max_d=3), st.integers(1, 5))
def test_parallel_equals_sequential(f, r):
    seq = grid_minimize(f, r, threads=1)
    par = grid_minimize(f, r, threads=4)
    assert seq == par


def test_parallel_merge_preserves_lex_first_ties():
    n, r = 3, 7
    f = HomogeneousPolynomial(n, 1, {tuple(int(i == j) for j in range(n)): 1 for i in range(n)})
    seq = grid_minimize(f, r, threads=1)  # constant 1 on the simplex, all tie
    for threads in (2, 3, 5, 8):
        assert grid_minimize(f, r, threads=threads) == seq


def test_max_points_guard():
    with pytest.raises(GridTooLargeError):
        grid_minimize(sum_of_squares(4), 10, max_points=50)


def test_range_enclosures_examples():
    f = sum_of_squares(2)
    lo_enc, hi_enc = range_enclosures(f, 2, elevation=0)
    assert (lo_enc.lo, lo_enc.hi) == (0, Fraction(1, 2))
    assert hi_enc.lo <= 1 <= hi_enc.hi

    lo4, _ = range_enclosures(f, 4, elevation=4)
    assert (lo4.lo, lo4.hi) == (Fraction(2, 5), Fraction(1, 2))  # elevated table min is 2/5
    assert lo4.contains(Fraction(1, 2))
    assert lo4.width < Fraction(1, 2)


@settings(max_examples=25)
@given(polynomials(max_n=3, max_d=3), st.integers(1, 4), st.integers(0, 3))
def test_range_enclosures_are_ordered_and_consistent(f, r, k):
    lo_enc, hi_enc = range_enclosures(f, r, elevation=k)
    assert lo_enc.lo <= lo_enc.hi
    assert hi_enc.lo <= hi_enc.hi
    # grid values sit inside the certified global range
    assert lo_enc.lo <= grid_minimize(f, r).value
    assert grid_maximize(f, r).value <= hi_enc.hi


@settings(max_examples=20)
@given(polynomials(max_n=3, max_d=3), st.integers(1, 4), st.integers(0, 3))
def test_grid_min_at_least_bernstein_lower_bound(f, r, k):
    lo_enc, _ = range_enclosures(f, r, elevation=k)
    assert grid_minimize(f, r).value >= lo_enc.lo
