"""Certified error coefficients for grid minimization over the simplex.

Every bound is reported as an exact rational coefficient of the (generally
unknown) range of function values: grid error <= coefficient * (fmax - fmin).
Absolute statements are derived on demand through certified range enclosures,
so every emitted inequality stays certified.  Inapplicability (wrong degree,
r out of range, m too small) is data, not an error.

Kinds and their coefficients, for degree d, grid denominator r, and reference
denominator m with k chosen so that (k-1)m < r <= km:

  KLS_QUAD         1/r                                     (d = 2)
  KLS_GENERAL      (1 - rfd/r^d) * C(2d-1,d) * d^d
  QUAD_REFINED     (m-r) / (r(m-1))                        (d = 2, r <= m)
  QUAD_DENOM       m/r^2                                   (d = 2)
  CUBIC_KLS        4/r - 4/r^2                             (d = 3, r >= 2)
  SQFREE_KLS       1 - rfd/r^d                             (square-free f)
  CUBIC_REFINED    (m-r)(4mr-2m-2r) / (r^2(m-1)(m-2))      (d = 3, r <= m, m >= 3)
  SQFREE_REFINED   1 - (rfd/r^d)(m^d/mfd)                  (square-free f, r <= m, m >= d)
  GENERAL_REFINED  (1 - (rfd m^d)/(r^d mfd)) * C(2d-1,d) * d^d   (r <= m, m >= d)
  CUBIC_RHO        m^2/(r^2(m-2)) if r <= m else 6m/r^2    (d = 3, m >= 3)
  GENERAL_RHO      (m/r^2) * c_d * C(2d-1,d) * d^d         (d >= 2, m >= d)

where rfd/mfd are the falling factorials of r/m and c_d comes from
falling_poly_coeffs.  The *_RHO and QUAD_DENOM kinds hold for every r >= 1
(the analysis passes through the refined bound at denominator km).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .combin import binomial, falling, falling_poly_coeffs
from .grid import DEFAULT_GRID_GUARD, grid_maximize, grid_minimize
from .poly import HomogeneousPolynomial, bernstein_table, elevate, is_square_free
from .rational import Enclosure


class DegenerateRangeError(ValueError):
    """The enclosures cannot certify that fmax exceeds fmin."""


class BoundKind(str, Enum):
    KLS_QUAD = "KLS_QUAD"
    KLS_GENERAL = "KLS_GENERAL"
    QUAD_REFINED = "QUAD_REFINED"
    QUAD_DENOM = "QUAD_DENOM"
    CUBIC_KLS = "CUBIC_KLS"
    SQFREE_KLS = "SQFREE_KLS"
    CUBIC_REFINED = "CUBIC_REFINED"
    SQFREE_REFINED = "SQFREE_REFINED"
    GENERAL_REFINED = "GENERAL_REFINED"
    CUBIC_RHO = "CUBIC_RHO"
    GENERAL_RHO = "GENERAL_RHO"


ALL_KINDS = tuple(BoundKind)

# kinds whose statement requires the polynomial to be square-free
SQUARE_FREE_KINDS = frozenset({BoundKind.SQFREE_KLS, BoundKind.SQFREE_REFINED})

# kinds whose coefficient needs the reference denominator m
M_DEPENDENT_KINDS = frozenset(
    {
        BoundKind.QUAD_REFINED,
        BoundKind.QUAD_DENOM,
        BoundKind.CUBIC_REFINED,
        BoundKind.SQFREE_REFINED,
        BoundKind.GENERAL_REFINED,
        BoundKind.CUBIC_RHO,
        BoundKind.GENERAL_RHO,
    }
)

# kinds proved by passing through the grid at denominator km, so valid for r > m
KM_CHAIN_KINDS = frozenset({BoundKind.QUAD_DENOM, BoundKind.CUBIC_RHO, BoundKind.GENERAL_RHO})


@dataclass(frozen=True)
class BoundReport:
    """One evaluated bound coefficient, or the reason it does not apply."""

    kind: BoundKind
    d: int
    r: int
    m: "int | None"
    k: "int | None"
    coefficient: "Fraction | None"
    applicable: bool
    reason: str = ""


def _report(kind, d, r, m, k, coefficient) -> BoundReport:
    return BoundReport(
        kind=kind, d=d, r=r, m=m, k=k, coefficient=Fraction(coefficient), applicable=True
    )


def _not_applicable(kind, d, r, m, reason) -> BoundReport:
    return BoundReport(
        kind=kind, d=d, r=r, m=m, k=None, coefficient=None, applicable=False, reason=reason
    )


def _bernstein_gap_factor(d: int) -> int:
    """C(2d-1, d) * d^d, the Bernstein-range-to-value-range factor."""
    return binomial(2 * d - 1, d) * d**d


def bound_coefficient(
    kind: "BoundKind | str", *, d: int, r: int, m: "int | None" = None
) -> BoundReport:
    """Exact coefficient of (fmax - fmin) for one bound kind.

    k (the multiple with (k-1)m < r <= km) is derived internally and echoed
    in the report for the kinds whose proof uses the grid at denominator km.
    """
    kind = BoundKind(kind)
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    if r < 1:
        raise ValueError(f"grid denominator must be positive, got {r}")
    if m is not None and m < 1:
        raise ValueError(f"reference denominator must be positive, got {m}")

    if kind in M_DEPENDENT_KINDS and m is None:
        return _not_applicable(kind, d, r, m, "needs the reference denominator m")
    k = None if m is None else -(-r // m)  # ceil(r/m), so (k-1)m < r <= km

    if kind is BoundKind.KLS_QUAD:
        if d != 2:
            return _not_applicable(kind, d, r, m, "stated for degree 2 only")
        return _report(kind, d, r, m, None, Fraction(1, r))

    if kind is BoundKind.KLS_GENERAL:
        return _report(
            kind, d, r, m, None,
            (1 - Fraction(falling(r, d), r**d)) * _bernstein_gap_factor(d),
        )

    if kind is BoundKind.QUAD_REFINED:
        if d != 2:
            return _not_applicable(kind, d, r, m, "stated for degree 2 only")
        if r > m:
            return _not_applicable(kind, d, r, m, "needs r <= m")
        if m == 1:
            return _report(kind, d, r, m, k, 0)  # m = 1 forces r = 1: both grids are vertices
        return _report(kind, d, r, m, k, Fraction(m - r, r * (m - 1)))

    if kind is BoundKind.QUAD_DENOM:
        if d != 2:
            return _not_applicable(kind, d, r, m, "stated for degree 2 only")
        return _report(kind, d, r, m, k, Fraction(m, r * r))

    if kind is BoundKind.CUBIC_KLS:
        if d != 3:
            return _not_applicable(kind, d, r, m, "stated for degree 3 only")
        if r < 2:
            return _not_applicable(kind, d, r, m, "needs r >= 2")
        return _report(kind, d, r, m, None, Fraction(4 * (r - 1), r * r))

    if kind is BoundKind.SQFREE_KLS:
        return _report(kind, d, r, m, None, 1 - Fraction(falling(r, d), r**d))

    if kind is BoundKind.CUBIC_REFINED:
        if d != 3:
            return _not_applicable(kind, d, r, m, "stated for degree 3 only")
        if m < 3:
            return _not_applicable(kind, d, r, m, "needs m >= 3")
        if r > m:
            return _not_applicable(kind, d, r, m, "needs r <= m")
        return _report(
            kind, d, r, m, k,
            Fraction((m - r) * (4 * m * r - 2 * m - 2 * r), r * r * (m - 1) * (m - 2)),
        )

    if kind is BoundKind.SQFREE_REFINED:
        if m < d:
            return _not_applicable(kind, d, r, m, "needs m >= d")
        if r > m:
            return _not_applicable(kind, d, r, m, "needs r <= m")
        return _report(
            kind, d, r, m, k,
            1 - Fraction(falling(r, d) * m**d, r**d * falling(m, d)),
        )

    if kind is BoundKind.GENERAL_REFINED:
        if m < d:
            return _not_applicable(kind, d, r, m, "needs m >= d")
        if r > m:
            return _not_applicable(kind, d, r, m, "needs r <= m")
        return _report(
            kind, d, r, m, k,
            (1 - Fraction(falling(r, d) * m**d, r**d * falling(m, d)))
            * _bernstein_gap_factor(d),
        )

    if kind is BoundKind.CUBIC_RHO:
        if d != 3:
            return _not_applicable(kind, d, r, m, "stated for degree 3 only")
        if m < 3:
            return _not_applicable(kind, d, r, m, "needs m >= 3")
        if r <= m:
            return _report(kind, d, r, m, k, Fraction(m * m, r * r * (m - 2)))
        return _report(kind, d, r, m, k, Fraction(6 * m, r * r))

    if kind is BoundKind.GENERAL_RHO:
        if d < 2:
            return _not_applicable(kind, d, r, m, "rate constant defined for degree >= 2")
        if m < d:
            return _not_applicable(kind, d, r, m, "needs m >= d")
        return _report(
            kind, d, r, m, k,
            Fraction(m, r * r) * falling_poly_coeffs(d).c_d * _bernstein_gap_factor(d),
        )

    raise AssertionError(f"unhandled kind {kind}")


def cubic_threshold_reached(r: int, m: int) -> bool:
    """Whether r is past the crossover where the refined cubic bound
    is at least as strong as the coarse one.

    The crossover is r >= 1 + (m-1)/(sqrt(2m)-1); since both sides of the
    squared form are nonnegative for r, m >= 1, it is equivalent to the
    integer inequality 2m(r-1)^2 >= (m+r-2)^2.
    """
    if r < 1 or m < 1:
        raise ValueError("need r >= 1 and m >= 1")
    return 2 * m * (r - 1) ** 2 >= (m + r - 2) ** 2


# --- certified range machinery --------------------------------------------------


@dataclass(frozen=True)
class RangeAssumptions:
    """How to enclose the unknown simplex extrema of a polynomial.

    elevation controls the Bernstein side.  assume_min_denominator (resp.
    max) asserts that the simplex minimum (maximum) is attained on the grid
    with that denominator, collapsing that side of the enclosure to an exact
    grid value; results derived from an assumption are only as good as the
    assumption.  grid picks the sampling denominator used for the inner
    enclosure endpoints (defaults to the r of the operation).
    """

    elevation: int = 0
    grid: "int | None" = None
    assume_min_denominator: "int | None" = None
    assume_max_denominator: "int | None" = None


def min_enclosure(
    f: HomogeneousPolynomial,
    r: int,
    params: RangeAssumptions = RangeAssumptions(),
    *,
    threads: int = 1,
    max_points: "int | None" = DEFAULT_GRID_GUARD,
) -> Enclosure:
    """Certified enclosure of the simplex minimum of f."""
    if params.assume_min_denominator is not None:
        v = grid_minimize(
            f, params.assume_min_denominator, threads=threads, max_points=max_points
        ).value
        return Enclosure(v, v)
    table = bernstein_table(elevate(f, params.elevation))
    sample_r = params.grid if params.grid is not None else r
    hi = grid_minimize(f, sample_r, threads=threads, max_points=max_points).value
    if sample_r != r:
        hi = min(hi, grid_minimize(f, r, threads=threads, max_points=max_points).value)
    return Enclosure(table.min_coeff, hi)


def max_enclosure(
    f: HomogeneousPolynomial,
    r: int,
    params: RangeAssumptions = RangeAssumptions(),
    *,
    threads: int = 1,
    max_points: "int | None" = DEFAULT_GRID_GUARD,
) -> Enclosure:
    """Certified enclosure of the simplex maximum of f."""
    if params.assume_max_denominator is not None:
        v = grid_maximize(
            f, params.assume_max_denominator, threads=threads, max_points=max_points
        ).value
        return Enclosure(v, v)
    table = bernstein_table(elevate(f, params.elevation))
    sample_r = params.grid if params.grid is not None else r
    lo = grid_maximize(f, sample_r, threads=threads, max_points=max_points).value
    if sample_r != r:
        lo = max(lo, grid_maximize(f, r, threads=threads, max_points=max_points).value)
    return Enclosure(lo, table.max_coeff)


def range_upper_bound(
    f: HomogeneousPolynomial,
    params: RangeAssumptions = RangeAssumptions(),
    *,
    threads: int = 1,
    max_points: "int | None" = DEFAULT_GRID_GUARD,
) -> Fraction:
    """Certified upper bound on fmax - fmin."""
    lo = min_enclosure(f, 1, params, threads=threads, max_points=max_points).lo
    hi = max_enclosure(f, 1, params, threads=threads, max_points=max_points).hi
    return hi - lo


def rho_interval(
    f: HomogeneousPolynomial,
    r: int,
    params: RangeAssumptions = RangeAssumptions(),
    *,
    threads: int = 1,
    max_points: "int | None" = DEFAULT_GRID_GUARD,
) -> Enclosure:
    """Certified interval for the normalized grid error at denominator r.

    The normalized error is (grid minimum - simplex minimum) / (fmax - fmin);
    it always lies in [0, 1].  Raises DegenerateRangeError when the enclosures
    cannot separate fmax from fmin (for instance the zero polynomial).  The
    interval collapses to a point when the numerator is certified zero (the
    minimizer lies on the grid) or when both extrema are pinned by assumed
    denominators.
    """
    g_r = grid_minimize(f, r, threads=threads, max_points=max_points).value
    lo_enc = min_enclosure(f, r, params, threads=threads, max_points=max_points)
    hi_enc = max_enclosure(f, r, params, threads=threads, max_points=max_points)
    den_lo = hi_enc.lo - lo_enc.hi
    den_hi = hi_enc.hi - lo_enc.lo
    if den_lo <= 0:
        raise DegenerateRangeError(
            "degenerate range: cannot certify that fmax exceeds fmin "
            f"(range enclosure gap is [{den_lo}, {den_hi}])"
        )
    num_hi = g_r - lo_enc.lo
    if num_hi < 0:
        raise ValueError(
            "assumed minimizer denominator is inconsistent: its grid value "
            "exceeds the grid minimum at r"
        )
    num_lo = max(Fraction(0), g_r - lo_enc.hi)
    return Enclosure(num_lo / den_hi, min(Fraction(1), num_hi / den_lo))


@dataclass(frozen=True)
class BoundWitness:
    """One checked instance of grid error against a bound coefficient.

    lhs is the exact grid-minimum gap between denominators r and m; rhs is
    coefficient * (certified upper bound on the range).  holds must be true
    on every instance where the kind applies.
    """

    kind: BoundKind
    d: int
    r: int
    m: int
    applicable: bool
    reason: str
    lhs: "Fraction | None"
    coefficient: "Fraction | None"
    range_bound: "Fraction | None"
    rhs: "Fraction | None"
    holds: "bool | None"


def check_bound(
    f: HomogeneousPolynomial,
    kind: "BoundKind | str",
    r: int,
    m: int,
    params: RangeAssumptions = RangeAssumptions(),
    *,
    threads: int = 1,
    max_points: "int | None" = DEFAULT_GRID_GUARD,
) -> BoundWitness:
    """Witness the inequality grid_min(r) - grid_min(m) <= coefficient * range."""
    kind = BoundKind(kind)
    report = bound_coefficient(kind, d=f.d, r=r, m=m)
    if report.applicable and kind in SQUARE_FREE_KINDS and not is_square_free(f):
        report = _not_applicable(kind, f.d, r, m, "polynomial is not square-free")
    if not report.applicable:
        return BoundWitness(
            kind=kind, d=f.d, r=r, m=m, applicable=False, reason=report.reason,
            lhs=None, coefficient=None, range_bound=None, rhs=None, holds=None,
        )
    lhs = (
        grid_minimize(f, r, threads=threads, max_points=max_points).value
        - grid_minimize(f, m, threads=threads, max_points=max_points).value
    )
    range_bound = range_upper_bound(f, params, threads=threads, max_points=max_points)
    rhs = report.coefficient * range_bound
    return BoundWitness(
        kind=kind, d=f.d, r=r, m=m, applicable=True, reason="",
        lhs=lhs, coefficient=report.coefficient, range_bound=range_bound,
        rhs=rhs, holds=lhs <= rhs,
    )


def bound_table(
    d: int, r_values: Sequence[int], m_values: "Sequence[int | None]"
) -> "list[BoundReport]":
    """Reports for every kind over a sweep of r (and optionally m)."""
    out = []
    for r in r_values:
        for m in m_values:
            for kind in ALL_KINDS:
                out.append(bound_coefficient(kind, d=d, r=r, m=m))
    return out
