"""Rational enclosures: directed integer roots and a small interval algebra.

Everything here manipulates pairs of exact rationals [lo, hi] guaranteed to
contain the target real number.  Widths shrink as the `bits` argument grows;
nothing is ever rounded in an uncontrolled direction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = ["iroot", "Enclosure", "sqrt_enclosure", "nth_root_enclosure"]


def iroot(x: int, r: int) -> int:
    """Floor of the r-th root of a non-negative integer (Newton on integers)."""
    if x < 0:
        raise ValueError("iroot requires x >= 0")
    if r < 1:
        raise ValueError("iroot requires r >= 1")
    if x in (0, 1) or r == 1:
        return x
    if r == 2:
        return math.isqrt(x)
    # Seed above the true root, then Newton descends monotonically.
    guess = 1 << -(-x.bit_length() // r)
    while True:
        nxt = ((r - 1) * guess + x // guess ** (r - 1)) // r
        if nxt >= guess:
            break
        guess = nxt
    while guess ** r > x:
        guess -= 1
    return guess


@dataclass(frozen=True)
class Enclosure:
    """Closed rational interval [lo, hi] certified to contain a real value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty enclosure: lo={self.lo} > hi={self.hi}")

    @classmethod
    def point(cls, q: Fraction | int) -> "Enclosure":
        q = Fraction(q)
        return cls(q, q)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, q: Fraction | int) -> bool:
        return self.lo <= q <= self.hi

    def strictly_above(self, q: Fraction | int) -> bool:
        return self.lo > q

    def strictly_below(self, q: Fraction | int) -> bool:
        return self.hi < q

    def __neg__(self) -> "Enclosure":
        return Enclosure(-self.hi, -self.lo)

    def __add__(self, other: "Enclosure | Fraction | int") -> "Enclosure":
        if isinstance(other, Enclosure):
            return Enclosure(self.lo + other.lo, self.hi + other.hi)
        return Enclosure(self.lo + other, self.hi + other)

    __radd__ = __add__

    def __sub__(self, other: "Enclosure | Fraction | int") -> "Enclosure":
        return self + (-other if isinstance(other, Enclosure) else Enclosure.point(-other))

    def __rsub__(self, other: "Fraction | int") -> "Enclosure":
        return Enclosure.point(other) + (-self)

    def __mul__(self, other: "Enclosure | Fraction | int") -> "Enclosure":
        if not isinstance(other, Enclosure):
            other = Enclosure.point(other)
        products = (self.lo * other.lo, self.lo * other.hi,
                    self.hi * other.lo, self.hi * other.hi)
        return Enclosure(min(products), max(products))

    __rmul__ = __mul__

    def reciprocal(self) -> "Enclosure":
        if self.lo <= 0 <= self.hi:
            raise ValueError("reciprocal of an enclosure containing 0")
        return Enclosure(1 / self.hi, 1 / self.lo)


def sqrt_enclosure(x: Fraction | int, bits: int) -> Enclosure:
    """Dyadic enclosure of sqrt(x) of width at most 2^-bits, x >= 0."""
    return nth_root_enclosure(x, 2, bits)


def nth_root_enclosure(x: Fraction | int, r: int, bits: int) -> Enclosure:
    """Dyadic enclosure of x^(1/r) of width at most 2^-bits.

    Requires x >= 0 for even r; odd roots of negative x mirror through 0.
    With scale = 2^bits and b = iroot(floor(x * scale^r), r) the bracket
    [b/scale, (b+1)/scale] always contains the root: b^r <= x*scale^r by
    construction, and (b+1)^r > floor(x*scale^r) forces (b+1)^r > x*scale^r
    because both sides of the strict comparison are integers.
    """
    x = Fraction(x)
    if x < 0:
        if r % 2 == 0:
            raise ValueError(f"even root of negative value {x}")
        return -nth_root_enclosure(-x, r, bits)
    scale = 1 << bits
    scaled = x * scale ** r
    b = iroot(scaled.numerator // scaled.denominator, r)
    lo = Fraction(b, scale)
    if lo ** r == x:
        return Enclosure.point(lo)
    return Enclosure(lo, Fraction(b + 1, scale))
