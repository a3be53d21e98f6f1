"""Exact combinatorial primitives.

Binomials, multinomials, falling factorials, Stirling numbers of the second
kind, lexicographic enumeration of the index sets I(n, d) (nonnegative integer
vectors with a fixed coordinate sum), and the coefficient data of the shifted
falling-factorial polynomial (x-1)(x-2)...(x-d+1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence, Union

IntOrFraction = Union[int, Fraction]


def binomial(n: int, k: int) -> int:
    """C(n, k) for integer n >= 0, zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(d: int, alpha: Sequence[int]) -> int:
    """d! / (alpha_1! ... alpha_n!) for a composition alpha of d."""
    if any(a < 0 for a in alpha):
        raise ValueError(f"negative entry in {tuple(alpha)}")
    if sum(alpha) != d:
        raise ValueError(f"entries of {tuple(alpha)} must sum to {d}")
    out = 1
    rest = d
    for a in alpha:
        out *= math.comb(rest, a)
        rest -= a
    return out


def falling(x: IntOrFraction, d: int) -> IntOrFraction:
    """Falling factorial x(x-1)(x-2)...(x-d+1); the empty product (d=0) is 1."""
    if d < 0:
        raise ValueError(f"falling factorial needs d >= 0, got {d}")
    out: IntOrFraction = 1
    for i in range(d):
        out *= x - i
    return out


@lru_cache(maxsize=None)
def stirling2(a: int, b: int) -> int:
    """Number of partitions of an a-element set into b nonempty blocks.

    S(0,0) = 1, S(a,0) = 0 for a > 0, S(a,b) = 0 for b > a, and otherwise
    S(a,b) = b*S(a-1,b) + S(a-1,b-1).  Memoized; thread-safe because the
    result for a key never changes.
    """
    if a < 0 or b < 0:
        raise ValueError(f"Stirling numbers need nonnegative arguments, got ({a}, {b})")
    if a == b:
        return 1
    if b == 0 or b > a:
        return 0
    return b * stirling2(a - 1, b) + stirling2(a - 1, b - 1)


# --- index sets I(n, total) in lexicographic order ---------------------------

ExponentTuple = tuple


def composition_count(n: int, total: int) -> int:
    """|I(n, total)| = C(total + n - 1, n - 1)."""
    if n < 1 or total < 0:
        raise ValueError(f"need n >= 1 and total >= 0, got n={n}, total={total}")
    return math.comb(total + n - 1, n - 1)


def composition_successor(alpha: Sequence[int]) -> "tuple[int, ...] | None":
    """Lexicographic successor of alpha within I(n, sum(alpha)), or None at the top.

    The order runs from (0, ..., 0, s) up to (s, 0, ..., 0): move one unit
    leftward past the last nonzero entry and reset the tail to its smallest
    arrangement.
    """
    n = len(alpha)
    last = None
    for i in range(n - 1, -1, -1):
        if alpha[i] != 0:
            last = i
            break
    if last is None or last == 0:
        return None
    out = list(alpha)
    v = out[last]
    out[last] = 0
    out[last - 1] += 1
    out[n - 1] = v - 1
    return tuple(out)


def compositions(n: int, total: int) -> Iterator[tuple[int, ...]]:
    """Yield every alpha in I(n, total) exactly once, in lexicographic order.

    Constant memory: each element is derived from its predecessor.
    """
    composition_count(n, total)  # validates arguments
    cur: "tuple[int, ...] | None" = (0,) * (n - 1) + (total,)
    while cur is not None:
        yield cur
        cur = composition_successor(cur)


def composition_unrank(n: int, total: int, rank: int) -> tuple[int, ...]:
    """The rank-th element (0-based) of I(n, total) in lexicographic order."""
    if not 0 <= rank < composition_count(n, total):
        raise ValueError(f"rank {rank} out of range for I({n}, {total})")
    out = []
    for pos in range(n - 1):
        v = 0
        while True:
            block = math.comb(total - v + n - pos - 2, n - pos - 2)
            if rank < block:
                break
            rank -= block
            v += 1
        out.append(v)
        total -= v
    out.append(total)
    return tuple(out)


# --- shifted falling-factorial polynomial ------------------------------------


@dataclass(frozen=True)
class FallingPolyCoeffs:
    """Expansion data of q(x) = (x-1)(x-2)...(x-d+1) for d >= 2.

    q(x) = x^(d-1) + sum_{i=0}^{d-2} (-1)^(d-1-i) a_i x^i with every a_i a
    positive integer, together with the derived constant c_d = (d-1) * sum(a).
    """

    d: int
    a: tuple[int, ...]
    c_d: int


def falling_poly_coeffs(d: int) -> FallingPolyCoeffs:
    """Expand (x-1)(x-2)...(x-d+1) and strip the alternating signs."""
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    coeffs = [1]  # coeffs[j] = coefficient of x^j, starting from the polynomial 1
    for root in range(1, d):
        nxt = [0] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            nxt[j + 1] += c
            nxt[j] -= root * c
        coeffs = nxt
    assert coeffs[d - 1] == 1
    a = []
    for i in range(d - 1):
        ai = coeffs[i] if (d - 1 - i) % 2 == 0 else -coeffs[i]
        assert ai > 0
        a.append(ai)
    return FallingPolyCoeffs(d=d, a=tuple(a), c_d=(d - 1) * sum(a))
