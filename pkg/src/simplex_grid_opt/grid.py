"""Enumeration of the rational simplex grid and exact optimization over it.

The grid with denominator r is the set of simplex points x with r*x integral;
it is in bijection with I(n, r) via alpha <-> alpha/r, so a full sweep costs
C(n + r - 1, r) evaluations.  Minimization compares scaled integer values
(homogeneity gives f(alpha/r) = f(alpha)/r^d), which keeps the scan exact and
cheap; the reported value is reconstructed as a Fraction at the end.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterator

from .combin import composition_count, composition_successor, composition_unrank
from .poly import HomogeneousPolynomial, bernstein_table, elevate
from .rational import Enclosure

MINIMIZER_CAP = 16
DEFAULT_GRID_GUARD = 10**8


class GridTooLargeError(RuntimeError):
    """Raised when a grid sweep would exceed the configured point budget."""


@dataclass(frozen=True)
class GridSpec:
    """The grid on the standard simplex with n coordinates and denominator r."""

    n: int
    r: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.r < 1:
            raise ValueError(f"need n >= 1 and r >= 1, got n={self.n}, r={self.r}")

    @property
    def size(self) -> int:
        return composition_count(self.n, self.r)


def enumerate_grid(spec: GridSpec) -> "Iterator[tuple[int, ...]]":
    """Yield the numerator tuple alpha of every grid point alpha/r, in lex order."""
    cur: "tuple[int, ...] | None" = (0,) * (spec.n - 1) + (spec.r,)
    while cur is not None:
        yield cur
        cur = composition_successor(cur)


@dataclass(frozen=True)
class GridMinResult:
    """Outcome of an exhaustive grid sweep.

    minimizers holds the lexicographically first numerator tuples attaining
    the value (point = alpha/r), capped; tie_count is the exact number of
    attaining points.
    """

    value: Fraction
    r: int
    minimizers: "tuple[tuple[int, ...], ...]"
    tie_count: int
    evaluations: int


def _integer_terms(f: HomogeneousPolynomial) -> "tuple[int, list[tuple[int, tuple[tuple[int, int], ...]]]]":
    """Clear denominators: returns (L, terms) with L*f having integer coefficients.

    Each term is (coefficient, ((var_index, exponent), ...)) with exponents >= 1.
    """
    scale = lcm(*(c.denominator for c in f.coeffs.values())) if f.coeffs else 1
    terms = []
    for alpha, c in f.coeffs.items():
        ic = int(c * scale)
        facs = tuple((i, a) for i, a in enumerate(alpha) if a)
        terms.append((ic, facs))
    return scale, terms


def _scan_chunk(terms, n: int, r: int, start_rank: int, count: int, cap: int):
    """Scan `count` grid points from lex rank `start_rank`; track the minimum.

    Returns (best scaled value, lex-first minimizers up to cap, tie count).
    Pure function of its arguments, so any partition of the full range merges
    to the same result.
    """
    alpha = composition_unrank(n, r, start_rank)
    best = None
    mins: "list[tuple[int, ...]]" = []
    ties = 0
    for _ in range(count):
        value = 0
        for coef, facs in terms:
            t = coef
            for i, a in facs:
                t *= alpha[i] ** a
            value += t
        if best is None or value < best:
            best = value
            mins = [alpha]
            ties = 1
        elif value == best:
            ties += 1
            if len(mins) < cap:
                mins.append(alpha)
        alpha = composition_successor(alpha)
    return best, mins, ties


def grid_minimize(
    f: HomogeneousPolynomial,
    r: int,
    *,
    threads: int = 1,
    minimizer_cap: int = MINIMIZER_CAP,
    max_points: "int | None" = None,
) -> GridMinResult:
    """Exact minimum of f over the grid with denominator r.

    The sweep is exhaustive and deterministic: with threads > 1 the lex-ordered
    point stream is split into contiguous chunks whose partial results merge
    independently of the partition, so the outcome never depends on threading.
    """
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    spec = GridSpec(f.n, r)
    total = spec.size
    if max_points is not None and total > max_points:
        raise GridTooLargeError(f"grid has {total} points, budget is {max_points}")
    scale, terms = _integer_terms(f)

    chunk_count = max(1, min(threads, total))
    bounds = [(total * i) // chunk_count for i in range(chunk_count + 1)]
    jobs = [
        (bounds[i], bounds[i + 1] - bounds[i])
        for i in range(chunk_count)
        if bounds[i + 1] > bounds[i]
    ]
    if len(jobs) == 1:
        partials = [_scan_chunk(terms, f.n, r, jobs[0][0], jobs[0][1], minimizer_cap)]
    else:
        with ThreadPoolExecutor(max_workers=len(jobs)) as pool:
            partials = list(
                pool.map(lambda job: _scan_chunk(terms, f.n, r, job[0], job[1], minimizer_cap), jobs)
            )

    best = None
    mins: "list[tuple[int, ...]]" = []
    ties = 0
    for value, chunk_mins, chunk_ties in partials:  # chunks arrive in lex order
        if best is None or value < best:
            best, mins, ties = value, list(chunk_mins), chunk_ties
        elif value == best:
            ties += chunk_ties
            mins.extend(chunk_mins[: minimizer_cap - len(mins)])
    assert best is not None
    return GridMinResult(
        value=Fraction(best, scale * r**f.d),
        r=r,
        minimizers=tuple(mins[:minimizer_cap]),
        tie_count=ties,
        evaluations=total,
    )


def grid_maximize(
    f: HomogeneousPolynomial,
    r: int,
    *,
    threads: int = 1,
    minimizer_cap: int = MINIMIZER_CAP,
    max_points: "int | None" = None,
) -> GridMinResult:
    """Exact maximum of f over the grid; mirror of grid_minimize."""
    neg = HomogeneousPolynomial(f.n, f.d, {a: -c for a, c in f.coeffs.items()})
    res = grid_minimize(
        neg, r, threads=threads, minimizer_cap=minimizer_cap, max_points=max_points
    )
    return GridMinResult(
        value=-res.value,
        r=r,
        minimizers=res.minimizers,
        tie_count=res.tie_count,
        evaluations=res.evaluations,
    )


def range_enclosures(
    f: HomogeneousPolynomial,
    r: int,
    elevation: int = 0,
    *,
    threads: int = 1,
    max_points: "int | None" = None,
) -> "tuple[Enclosure, Enclosure]":
    """Certified enclosures of the simplex minimum and maximum of f.

    The minimum lies in [min Bernstein coefficient at the given elevation,
    grid minimum at denominator r]; the maximum symmetrically.
    """
    table = bernstein_table(elevate(f, elevation))
    lo = grid_minimize(f, r, threads=threads, max_points=max_points).value
    hi = grid_maximize(f, r, threads=threads, max_points=max_points).value
    return Enclosure(table.min_coeff, lo), Enclosure(hi, table.max_coeff)
