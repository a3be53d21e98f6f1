"""Shared fixtures-by-convention: example objects and hypothesis strategies."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import hypothesis.strategies as st

from simplex_grid_opt import Graph, HomogeneousPolynomial

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


def sum_of_squares(n: int) -> HomogeneousPolynomial:
    return HomogeneousPolynomial(
        n, 2, {tuple(2 * (i == j) for j in range(n)): 1 for i in range(n)}
    )


def strict_gap_poly() -> HomogeneousPolynomial:
    """2x1^2 + x2^2 - 5x1x2: simplex minimum -17/32 at (7/16, 9/16)."""
    return HomogeneousPolynomial(2, 2, {(2, 0): 2, (0, 2): 1, (1, 1): -5})


def petersen() -> Graph:
    outer = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(6, 8), (8, 10), (10, 7), (7, 9), (9, 6)]
    return Graph.from_edges(10, outer + spokes + inner)


@st.composite
def exponent_tuples(draw, n: int, d: int):
    """A random element of I(n, d)."""
    cuts = sorted(draw(st.lists(st.integers(0, d), min_size=n - 1, max_size=n - 1)))
    parts = []
    prev = 0
    for c in cuts:
        parts.append(c - prev)
        prev = c
    parts.append(d - prev)
    return tuple(parts)


@st.composite
def polynomials(draw, max_n: int = 4, max_d: int = 3, coef_bound: int = 9):
    """Sparse nonzero integer-coefficient homogeneous polynomials."""
    n = draw(st.integers(1, max_n))
    d = draw(st.integers(1, max_d))
    n_terms = draw(st.integers(1, 6))
    coeffs = {}
    for _ in range(n_terms):
        alpha = draw(exponent_tuples(n, d))
        c = draw(st.integers(-coef_bound, coef_bound))
        coeffs[alpha] = coeffs.get(alpha, 0) + c
    coeffs = {a: c for a, c in coeffs.items() if c}
    if not coeffs:
        coeffs[(d,) + (0,) * (n - 1)] = 1
    return HomogeneousPolynomial(n, d, coeffs)


@st.composite
def simplex_points(draw, n: int):
    """A random rational point of the standard simplex with n coordinates."""
    weights = draw(
        st.lists(st.integers(0, 12), min_size=n, max_size=n).filter(lambda w: sum(w) > 0)
    )
    total = sum(weights)
    return tuple(Fraction(w, total) for w in weights)
