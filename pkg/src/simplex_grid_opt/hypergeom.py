"""The draws-without-replacement urn distribution on the simplex grid.

An urn holds m balls, counts[i] of color i; drawing r balls without
replacement makes the color-count vector Y a lattice point of I(n, r), and
X = Y/r a random point of the simplex grid with denominator r.  This module
computes the pmf, raw moments of Y and X through a Stirling-number expansion,
closed forms for the degree-2 and degree-3 moments, exact expectations E[f(X)]
for polynomial f, and the draws-with-replacement counterpart of E[f(X)] (the
order-r Bernstein approximation of f).

Everything is exact summation; nothing is sampled.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .combin import binomial, composition_count, compositions, falling, multinomial, stirling2
from .poly import HomogeneousPolynomial, evaluate
from .rational import as_rational

BRUTE_FORCE_GATE = 10**4


@dataclass(frozen=True)
class HypergeomParams:
    """Urn description: m balls total, counts per color, r draws."""

    m: int
    counts: "tuple[int, ...]"
    r: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if len(self.counts) < 1:
            raise ValueError("need at least one color")
        if any(c < 0 for c in self.counts):
            raise ValueError(f"negative color count in {self.counts}")
        if sum(self.counts) != self.m:
            raise ValueError(f"counts {self.counts} sum to {sum(self.counts)}, expected m={self.m}")
        if not 1 <= self.r <= self.m:
            raise ValueError(f"need 1 <= r <= m, got r={self.r}, m={self.m}")

    @property
    def n(self) -> int:
        return len(self.counts)

    def mean_point(self) -> "tuple[Fraction, ...]":
        """E[X] = counts/m, a rational simplex point."""
        return tuple(Fraction(c, self.m) for c in self.counts)


def pmf(p: HypergeomParams, alpha: Sequence[int]) -> Fraction:
    """Probability of drawing exactly alpha[i] balls of each color i."""
    if len(alpha) != p.n:
        raise ValueError(f"outcome has {len(alpha)} colors, expected {p.n}")
    if any(a < 0 for a in alpha):
        raise ValueError(f"negative count in {tuple(alpha)}")
    if sum(alpha) != p.r:
        raise ValueError(f"outcome {tuple(alpha)} must sum to the draw count {p.r}")
    num = 1
    for mi, ai in zip(p.counts, alpha):
        num *= binomial(mi, ai)
        if num == 0:
            return Fraction(0)
    return Fraction(num, binomial(p.m, p.r))


def moment(p: HypergeomParams, beta: Sequence[int]) -> Fraction:
    """Raw moment E[prod Y_i^beta_i] via the Stirling-number expansion.

    Sums falling(r,|a|)/falling(m,|a|) * prod falling(counts_i, a_i) * S(beta_i, a_i)
    over all a <= beta componentwise.  Terms with |a| > r vanish because
    falling(r, |a|) = 0, and |a| <= r <= m keeps every denominator nonzero,
    so zero color counts need no special casing.
    """
    beta = tuple(int(b) for b in beta)
    if len(beta) != p.n:
        raise ValueError(f"moment index has {len(beta)} entries, expected {p.n}")
    if any(b < 0 for b in beta):
        raise ValueError(f"negative entry in {beta}")
    total = Fraction(0)
    for alpha in product(*(range(b + 1) for b in beta)):
        k = sum(alpha)
        if k > p.r:
            continue
        num = falling(p.r, k)
        for mi, ai, bi in zip(p.counts, alpha, beta):
            num *= falling(mi, ai) * stirling2(bi, ai)
            if num == 0:
                break
        if num:
            total += Fraction(num, falling(p.m, k))
    return total


def scaled_moment(p: HypergeomParams, beta: Sequence[int]) -> Fraction:
    """Raw moment E[prod X_i^beta_i] of the grid point X = Y/r."""
    return moment(p, beta) / Fraction(p.r) ** sum(beta)


def moment_bruteforce(
    p: HypergeomParams, beta: Sequence[int], *, max_points: int = BRUTE_FORCE_GATE
) -> Fraction:
    """Oracle: E[prod Y_i^beta_i] summed outcome by outcome from the pmf.

    Independent of the Stirling-number route; gated because the outcome set
    I(n, r) grows combinatorially.
    """
    beta = tuple(int(b) for b in beta)
    if len(beta) != p.n:
        raise ValueError(f"moment index has {len(beta)} entries, expected {p.n}")
    size = composition_count(p.n, p.r)
    if size > max_points:
        raise ValueError(f"brute force over {size} outcomes exceeds the gate {max_points}")
    num = 0
    for alpha in compositions(p.n, p.r):
        weight = 1
        for mi, ai in zip(p.counts, alpha):
            weight *= binomial(mi, ai)
            if weight == 0:
                break
        if weight == 0:
            continue
        value = 1
        for ai, bi in zip(alpha, beta):
            value *= ai**bi
        num += value * weight
    return Fraction(num, binomial(p.m, p.r))


def scaled_moment_bruteforce(
    p: HypergeomParams, beta: Sequence[int], *, max_points: int = BRUTE_FORCE_GATE
) -> Fraction:
    return moment_bruteforce(p, beta, max_points=max_points) / Fraction(p.r) ** sum(beta)


def quadratic_moments_closed(p: HypergeomParams) -> "dict[tuple[int, int], Fraction]":
    """Closed-form degree-2 moments E[X_i X_j], keyed by sorted index pairs.

    Requires m >= 2.  The textbook form divides by counts[i]; here it is
    multiplied through, so zero color counts are fine:
      E[X_i^2]   = (m_i/m)^2 (1 - c) + (m_i/m) c,   c = (m-r) / (r(m-1))
      E[X_i X_j] = (m_i m_j / m^2) (1 - c)          for i != j.
    """
    if p.m < 2:
        raise ValueError("closed-form quadratic moments need m >= 2")
    m, r = p.m, p.r
    c = Fraction(m - r, r * (m - 1))
    out: "dict[tuple[int, int], Fraction]" = {}
    for i, mi in enumerate(p.counts):
        out[(i, i)] = Fraction(mi * mi, m * m) * (1 - c) + Fraction(mi, m) * c
        for j in range(i + 1, p.n):
            out[(i, j)] = Fraction(mi * p.counts[j], m * m) * (1 - c)
    return out


def cubic_moments_closed(p: HypergeomParams) -> "dict[tuple[int, int, int], Fraction]":
    """Closed-form degree-3 moments E[X_i X_j X_k], keyed by sorted index triples.

    Requires m >= 3.  With D = r^2 (m-1)(m-2) and c = (m-r)(3mr - 2(m+r))/D,
    the denominator-free rewrites are:
      E[X_i^3]     = (m_i/m)^3 (1 - c) + (m_i/m)(m-r)(3(r-1)m_i + m - 2r)/D
      E[X_i^2 X_j] = (m_i^2 m_j/m^3)(1 - c) + (m_i m_j/m)(m-r)(r-1)/D
      E[X_i X_j X_k] = (m_i m_j m_k/m^3)(1 - c)
    """
    if p.m < 3:
        raise ValueError("closed-form cubic moments need m >= 3")
    m, r = p.m, p.r
    den = r * r * (m - 1) * (m - 2)
    c = Fraction((m - r) * (3 * m * r - 2 * (m + r)), den)
    out: "dict[tuple[int, int, int], Fraction]" = {}
    counts = p.counts
    for i, mi in enumerate(counts):
        out[(i, i, i)] = Fraction(mi**3, m**3) * (1 - c) + Fraction(mi, m) * Fraction(
            (m - r) * (3 * (r - 1) * mi + m - 2 * r), den
        )
        for j in range(p.n):
            if j == i:
                continue
            key = tuple(sorted((i, i, j)))
            out[key] = Fraction(mi * mi * counts[j], m**3) * (1 - c) + Fraction(
                mi * counts[j], m
            ) * Fraction((m - r) * (r - 1), den)
        for j in range(i + 1, p.n):
            for k in range(j + 1, p.n):
                out[(i, j, k)] = Fraction(mi * counts[j] * counts[k], m**3) * (1 - c)
    return out


def expectation(f: HomogeneousPolynomial, p: HypergeomParams) -> Fraction:
    """E[f(X)], exactly.  Always an upper bound on the grid minimum at r = p.r."""
    if f.n != p.n:
        raise ValueError(f"polynomial has {f.n} variables, urn has {p.n} colors")
    return sum(
        (coef * scaled_moment(p, beta) for beta, coef in f.coeffs.items()),
        start=Fraction(0),
    )


def bernstein_approximation(
    f: HomogeneousPolynomial, x: Sequence, r: int
) -> Fraction:
    """Order-r Bernstein approximation of f at the simplex point x.

    Equals E[f(W/r)] for W the color counts of r draws *with* replacement
    from color distribution x: sum over alpha in I(n, r) of
    f(alpha/r) * (r!/alpha!) * x^alpha.  At least the grid minimum at r.
    """
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    if len(x) != f.n:
        raise ValueError(f"point has {len(x)} coordinates, polynomial has {f.n} variables")
    point = [as_rational(v) for v in x]
    if any(v < 0 for v in point) or sum(point) != 1:
        raise ValueError("point must lie on the standard simplex")
    total = Fraction(0)
    for alpha in compositions(f.n, r):
        weight = Fraction(multinomial(r, alpha))
        for xi, ai in zip(point, alpha):
            if ai:
                weight *= xi**ai
        if weight:
            total += evaluate(f, tuple(Fraction(a, r) for a in alpha)) * weight
    return total
