"""Exact verification of the combinatorial identities behind the error bounds.

Each check evaluates both sides of an identity (or inequality) in exact
arithmetic and records whether the stated relation holds.  The centerpiece is
the nonnegative correction term A_beta appearing in the moment decomposition
E[X^beta] = (counts/m)^beta * (r falling d)(m^d) / (r^d)(m falling d) + A_beta / (r^d (m falling d)),
whose multinomial-weighted sum collapses to r^d*(m falling d) - (r falling d)*m^d.

Sweeps are bounded by explicit caps so they can run exhaustively in CI.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Sequence

from .combin import (
    compositions,
    falling,
    falling_poly_coeffs,
    multinomial,
    stirling2,
)
from .hypergeom import HypergeomParams, scaled_moment


class IdentityName(str, Enum):
    VANDERMONDE_CHU = "VANDERMONDE_CHU"
    MULTINOMIAL = "MULTINOMIAL"
    STIRLING_SUM = "STIRLING_SUM"
    STIRLING_MULTI = "STIRLING_MULTI"
    KMR = "KMR"
    SIGMA = "SIGMA"
    PHI = "PHI"
    A_BETA_NONNEG = "A_BETA_NONNEG"
    A_BETA_SUM = "A_BETA_SUM"
    MOMENT_DECOMPOSITION = "MOMENT_DECOMPOSITION"


@dataclass(frozen=True)
class IdentityCheck:
    """One verified relation: lhs RELATION rhs, exactly."""

    name: str
    params: "tuple[tuple[str, object], ...]"
    lhs: Fraction
    rhs: Fraction
    relation: str  # "eq", "le", or "ge"
    holds: bool

    def params_str(self) -> str:
        return ";".join(f"{k}={v}" for k, v in self.params)


def _check(name: IdentityName, relation: str, lhs, rhs, **params) -> IdentityCheck:
    lhs = Fraction(lhs)
    rhs = Fraction(rhs)
    holds = {"eq": lhs == rhs, "le": lhs <= rhs, "ge": lhs >= rhs}[relation]
    return IdentityCheck(
        name=name.value,
        params=tuple((k, v) for k, v in params.items()),
        lhs=lhs,
        rhs=rhs,
        relation=relation,
        holds=holds,
    )


def a_beta(beta: Sequence[int], r: int, m: int, counts: Sequence[int]) -> int:
    """The correction term of the moment decomposition; nonnegative by theory.

    A_beta = (r falling d) * (prod falling(counts_i, beta_i) - prod counts_i^beta_i)
           + sum over a <= beta, a != beta of
             (r falling |a|) * falling(m - |a|, d - |a|) * prod falling(counts_i, a_i) * S(beta_i, a_i)

    using that (m falling d)/(m falling |a|) = falling(m - |a|, d - |a|) is an
    integer for |a| <= d <= m, so the whole quantity is integer-valued.
    """
    beta = tuple(int(b) for b in beta)
    counts = tuple(int(c) for c in counts)
    d = sum(beta)
    if d < 1:
        raise ValueError("beta must have positive total degree")
    if any(b < 0 for b in beta):
        raise ValueError(f"negative entry in {beta}")
    if len(counts) != len(beta):
        raise ValueError(f"counts has {len(counts)} entries, beta has {len(beta)}")
    if sum(counts) != m:
        raise ValueError(f"counts {counts} must sum to m={m}")
    if not 1 <= r <= m:
        raise ValueError(f"need 1 <= r <= m, got r={r}, m={m}")
    if m < d:
        raise ValueError(f"need m >= total degree, got m={m}, degree={d}")

    prod_falling = 1
    prod_power = 1
    for mi, bi in zip(counts, beta):
        prod_falling *= falling(mi, bi)
        prod_power *= mi**bi
    total = falling(r, d) * (prod_falling - prod_power)
    for alpha in product(*(range(b + 1) for b in beta)):
        if alpha == beta:
            continue
        k = sum(alpha)
        term = falling(r, k) * falling(m - k, d - k)
        for mi, ai, bi in zip(counts, alpha, beta):
            term *= falling(mi, ai) * stirling2(bi, ai)
            if term == 0:
                break
        total += term
    return total


def a_beta_sum_identity(r: int, m: int, d: int, counts: Sequence[int]) -> IdentityCheck:
    """sum over beta in I(n,d) of (d!/beta!) A_beta == r^d (m falling d) - (r falling d) m^d."""
    counts = tuple(int(c) for c in counts)
    lhs = 0
    for beta in compositions(len(counts), d):
        lhs += multinomial(d, beta) * a_beta(beta, r, m, counts)
    rhs = r**d * falling(m, d) - falling(r, d) * m**d
    return _check(IdentityName.A_BETA_SUM, "eq", lhs, rhs, n=len(counts), d=d, r=r, m=m, counts=counts)


def moment_decomposition_check(p: HypergeomParams, beta: Sequence[int]) -> IdentityCheck:
    """E[X^beta] must equal (counts/m)^beta * scaling + A_beta correction, exactly."""
    beta = tuple(int(b) for b in beta)
    d = sum(beta)
    point_power = Fraction(1)
    for mi, bi in zip(p.counts, beta):
        point_power *= Fraction(mi, p.m) ** bi
    scale = Fraction(falling(p.r, d) * p.m**d, p.r**d * falling(p.m, d))
    rhs = point_power * scale + Fraction(
        a_beta(beta, p.r, p.m, p.counts), p.r**d * falling(p.m, d)
    )
    lhs = scaled_moment(p, beta)
    return _check(
        IdentityName.MOMENT_DECOMPOSITION,
        "eq",
        lhs,
        rhs,
        m=p.m,
        counts=p.counts,
        r=p.r,
        beta=beta,
    )


def verify_identity(name: "IdentityName | str", **params) -> IdentityCheck:
    """Evaluate one named identity at explicit parameters.

    Parameter names per identity:
      VANDERMONDE_CHU  x (integer tuple), d
      MULTINOMIAL      x (integer tuple), d
      STIRLING_SUM     d, r
      STIRLING_MULTI   alpha (tuple in I(n,k)), d > |alpha|
      KMR              k, m, r  with (k-1)m < r <= km
      SIGMA            d >= 2, m >= d, k >= 1, r with (k-1)m < r <= km
      PHI              k >= 2, m >= 3, r with (k-1)m < r <= km
    """
    name = IdentityName(name)
    if name is IdentityName.VANDERMONDE_CHU:
        x = tuple(int(v) for v in params["x"])
        d = int(params["d"])
        if d < 0:
            raise ValueError("d must be nonnegative")
        lhs = falling(sum(x), d)
        rhs = 0
        for alpha in compositions(len(x), d):
            term = multinomial(d, alpha)
            for xi, ai in zip(x, alpha):
                term *= falling(xi, ai)
            rhs += term
        return _check(name, "eq", lhs, rhs, x=x, d=d)

    if name is IdentityName.MULTINOMIAL:
        x = tuple(int(v) for v in params["x"])
        d = int(params["d"])
        if d < 0:
            raise ValueError("d must be nonnegative")
        lhs = sum(x) ** d
        rhs = 0
        for alpha in compositions(len(x), d):
            term = multinomial(d, alpha)
            for xi, ai in zip(x, alpha):
                term *= xi**ai
            rhs += term
        return _check(name, "eq", lhs, rhs, x=x, d=d)

    if name is IdentityName.STIRLING_SUM:
        d = int(params["d"])
        r = int(params["r"])
        if d < 1 or r < 1:
            raise ValueError("need d >= 1 and r >= 1")
        lhs = sum(falling(r, k) * stirling2(d, k) for k in range(1, d))
        rhs = r**d - falling(r, d)
        return _check(name, "eq", lhs, rhs, d=d, r=r)

    if name is IdentityName.STIRLING_MULTI:
        alpha = tuple(int(a) for a in params["alpha"])
        d = int(params["d"])
        k = sum(alpha)
        if any(a < 0 for a in alpha):
            raise ValueError(f"negative entry in {alpha}")
        if d <= k:
            raise ValueError(f"need d > |alpha|, got d={d}, |alpha|={k}")
        rhs = 0
        for beta in compositions(len(alpha), d):
            term = multinomial(d, beta)
            for bi, ai in zip(beta, alpha):
                term *= stirling2(bi, ai)
            rhs += term
        rhs = Fraction(rhs, multinomial(k, alpha))
        return _check(name, "eq", stirling2(d, k), rhs, alpha=alpha, d=d)

    if name is IdentityName.KMR:
        k, m, r = int(params["k"]), int(params["m"]), int(params["r"])
        _require_km_window(k, m, r)
        # cross-multiplied so km = 1 (where both sides degenerate) stays exact
        holds = r * (k * m - r) <= m * (k * m - 1)
        lhs = Fraction(k * m - r, k * m - 1) if k * m > 1 else Fraction(0)
        rhs = Fraction(m, r)
        return IdentityCheck(
            name=name.value,
            params=(("k", k), ("m", m), ("r", r)),
            lhs=lhs,
            rhs=rhs,
            relation="le",
            holds=holds,
        )

    if name is IdentityName.SIGMA:
        d, m, k, r = (int(params[key]) for key in ("d", "m", "k", "r"))
        if d < 2:
            raise ValueError("need d >= 2 for the rate constant")
        if m < d:
            raise ValueError(f"need m >= d, got m={m}, d={d}")
        _require_km_window(k, m, r)
        km = k * m
        lhs = 1 - Fraction(falling(r, d) * km**d, r**d * falling(km, d))
        rhs = Fraction(m, r * r) * falling_poly_coeffs(d).c_d
        return _check(name, "le", lhs, rhs, d=d, m=m, k=k, r=r)

    if name is IdentityName.PHI:
        k, m, r = int(params["k"]), int(params["m"]), int(params["r"])
        if m < 3 or k < 2:
            raise ValueError("need m >= 3 and k >= 2")
        _require_km_window(k, m, r)
        km = k * m
        phi = (2 * km - 1) * r * r + (4 - 6 * km) * r - km * km + 6 * km - 4
        return _check(name, "ge", phi, 0, k=k, m=m, r=r)

    raise ValueError(f"{name.value} is not checked through verify_identity")


def _require_km_window(k: int, m: int, r: int) -> None:
    if k < 1 or m < 1 or r < 1:
        raise ValueError("need k, m, r >= 1")
    if not (k - 1) * m < r <= k * m:
        raise ValueError(f"need (k-1)m < r <= km, got k={k}, m={m}, r={r}")


# --- bounded sweeps -----------------------------------------------------------


def sweep_stirling_sum(max_d: int = 6, max_r: int = 30) -> "list[IdentityCheck]":
    return [
        verify_identity(IdentityName.STIRLING_SUM, d=d, r=r)
        for d in range(1, max_d + 1)
        for r in range(1, max_r + 1)
    ]


def sweep_stirling_multi(max_n: int = 3, max_d: int = 5) -> "list[IdentityCheck]":
    out = []
    for n in range(1, max_n + 1):
        for d in range(2, max_d + 1):
            for k in range(1, d):
                for alpha in compositions(n, k):
                    out.append(verify_identity(IdentityName.STIRLING_MULTI, alpha=alpha, d=d))
    return out


def sweep_integer_point_identities(
    samples: int = 25, max_n: int = 4, max_d: int = 4, seed: int = 0
) -> "list[IdentityCheck]":
    """Vandermonde-Chu and the multinomial theorem at random integer points."""
    rng = random.Random(seed)
    out = []
    for _ in range(samples):
        n = rng.randint(1, max_n)
        d = rng.randint(1, max_d)
        x = tuple(rng.randint(-6, 9) for _ in range(n))
        out.append(verify_identity(IdentityName.VANDERMONDE_CHU, x=x, d=d))
        out.append(verify_identity(IdentityName.MULTINOMIAL, x=x, d=d))
    return out


def sweep_kmr(limit: int = 40) -> "list[IdentityCheck]":
    out = []
    for k in range(1, limit + 1):
        for m in range(1, limit + 1):
            lo = (k - 1) * m + 1
            hi = min(k * m, limit)
            for r in range(lo, hi + 1):
                out.append(verify_identity(IdentityName.KMR, k=k, m=m, r=r))
    return out


def sweep_sigma(max_d: int = 5, max_m: int = 12, max_k: int = 4) -> "list[IdentityCheck]":
    out = []
    for d in range(2, max_d + 1):
        for m in range(d, max_m + 1):
            for k in range(1, max_k + 1):
                for r in range((k - 1) * m + 1, k * m + 1):
                    out.append(verify_identity(IdentityName.SIGMA, d=d, m=m, k=k, r=r))
    return out


def sweep_phi(max_k: int = 5, max_m: int = 10) -> "list[IdentityCheck]":
    out = []
    for k in range(2, max_k + 1):
        for m in range(3, max_m + 1):
            for r in range((k - 1) * m + 1, k * m + 1):
                out.append(verify_identity(IdentityName.PHI, k=k, m=m, r=r))
    return out


def sweep_a_beta(max_n: int = 3, max_d: int = 4, max_m: int = 8) -> "list[IdentityCheck]":
    """Exhaustive nonnegativity and sum checks over every admissible urn.

    For each n <= max_n, degree d <= max_d, m between d and max_m, every
    composition of m into n color counts, and every 1 <= r <= m: all A_beta
    over I(n, d) must be nonnegative (reported as one aggregated check via
    their minimum) and their weighted sum must match the closed form.
    """
    out = []
    for n in range(1, max_n + 1):
        for d in range(1, max_d + 1):
            for m in range(d, max_m + 1):
                for counts in compositions(n, m):
                    for r in range(1, m + 1):
                        worst = min(a_beta(beta, r, m, counts) for beta in compositions(n, d))
                        out.append(
                            _check(
                                IdentityName.A_BETA_NONNEG,
                                "ge",
                                worst,
                                0,
                                n=n,
                                d=d,
                                r=r,
                                m=m,
                                counts=counts,
                            )
                        )
                        out.append(a_beta_sum_identity(r, m, d, counts))
    return out


def sweep_moment_decomposition(
    max_n: int = 3, max_d: int = 3, max_m: int = 6
) -> "list[IdentityCheck]":
    out = []
    for n in range(1, max_n + 1):
        for d in range(1, max_d + 1):
            for m in range(d, max_m + 1):
                for counts in compositions(n, m):
                    for r in range(1, m + 1):
                        p = HypergeomParams(m=m, counts=counts, r=r)
                        for beta in compositions(n, d):
                            out.append(moment_decomposition_check(p, beta))
    return out


def run_default_sweeps(
    *,
    max_n: int = 3,
    max_d: int = 4,
    max_m: int = 8,
    max_k: int = 4,
    max_r: int = 30,
    samples: int = 25,
    seed: int = 0,
) -> "list[IdentityCheck]":
    """All identity sweeps at their default (CI-sized) caps."""
    checks: "list[IdentityCheck]" = []
    checks += sweep_stirling_sum(max_d=max(max_d, 6), max_r=max_r)
    checks += sweep_stirling_multi(max_n=max_n, max_d=max(max_d, 5))
    checks += sweep_integer_point_identities(samples=samples, seed=seed)
    checks += sweep_kmr(limit=max(max_r, 40))
    checks += sweep_sigma(max_d=max(max_d, 5), max_m=max(max_m, 12), max_k=max_k)
    checks += sweep_phi(max_k=max(max_k, 5), max_m=max(max_m, 10))
    checks += sweep_a_beta(max_n=max_n, max_d=max_d, max_m=max_m)
    checks += sweep_moment_decomposition(
        max_n=min(max_n, 3), max_d=min(max_d, 3), max_m=min(max_m, 6)
    )
    return checks
