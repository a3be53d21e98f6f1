"""Exact rational scalars, certified intervals, and rendering helpers.

Every quantity in this package is an exact rational number.  We use
`fractions.Fraction` as the single numeric type; Python ints participate in
the same numeric tower, so integer-valued results may be returned as ints
without losing exactness.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, ROUND_HALF_EVEN, localcontext
from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction

DECIMAL_DIGITS = 20


def as_rational(value: object) -> Fraction:
    """Convert ints, Fractions, and numeric strings to an exact Fraction.

    Strings may be fraction literals ("-17/32"), integers ("3"), or decimal
    literals ("0.1", "1.25e3"); decimals are converted exactly, so "0.1"
    becomes 1/10.  Binary floats are rejected: they generally do not equal
    the decimal the user wrote down.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rational coefficients")
    if isinstance(value, _RationalABC):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse {value!r} as an exact rational") from exc
    if isinstance(value, float):
        raise TypeError(
            f"refusing float {value!r}: pass a string or Fraction for an exact value"
        )
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def fraction_str(value: Rational) -> str:
    """Render a rational as a reduced fraction "p/q" (or "p" when integral)."""
    return str(Fraction(value))


def decimal_str(value: Rational, digits: int = DECIMAL_DIGITS) -> str:
    """Advisory decimal rendering: `digits` significant digits, round-half-even."""
    q = Fraction(value)
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_EVEN
        return str(Decimal(q.numerator) / Decimal(q.denominator))


@dataclass(frozen=True)
class Enclosure:
    """Certified interval [lo, hi] containing an unknown exact quantity."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty enclosure: lo {self.lo} > hi {self.hi}")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, value: Rational) -> bool:
        return self.lo <= Fraction(value) <= self.hi

    def intersect(self, other: "Enclosure") -> "Enclosure":
        """Intersection of two enclosures of the same quantity (never empty)."""
        return Enclosure(max(self.lo, other.lo), min(self.hi, other.hi))
