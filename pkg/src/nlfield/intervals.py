"""Rectangle interval arithmetic with exact rational endpoints.

Used for certified evaluation of embeddings: a box is guaranteed to
contain its target value, and all operations preserve containment.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class RatInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @staticmethod
    def point(x) -> "RatInterval":
        x = Fraction(x)
        return RatInterval(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __add__(self, other: "RatInterval") -> "RatInterval":
        return RatInterval(self.lo + other.lo, self.hi + other.hi)

    def __neg__(self) -> "RatInterval":
        return RatInterval(-self.hi, -self.lo)

    def __sub__(self, other: "RatInterval") -> "RatInterval":
        return self + (-other)

    def __mul__(self, other: "RatInterval") -> "RatInterval":
        ps = (self.lo * other.lo, self.lo * other.hi,
              self.hi * other.lo, self.hi * other.hi)
        return RatInterval(min(ps), max(ps))

    def scale(self, q: Fraction) -> "RatInterval":
        q = Fraction(q)
        if q >= 0:
            return RatInterval(self.lo * q, self.hi * q)
        return RatInterval(self.hi * q, self.lo * q)

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi

    def overlaps(self, other: "RatInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def sign(self) -> int | None:
        """Certified sign: +1/-1 if the interval excludes 0, else None."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return None


@dataclass(frozen=True)
class Box:
    """Axis-aligned rectangle in C with rational endpoints."""

    re: RatInterval
    im: RatInterval

    @staticmethod
    def point(re, im=0) -> "Box":
        return Box(RatInterval.point(re), RatInterval.point(im))

    @property
    def width(self) -> Fraction:
        return max(self.re.width, self.im.width)

    @property
    def mid(self) -> complex:
        return complex(self.re.mid) + 1j * complex(self.im.mid)

    @property
    def is_real_line(self) -> bool:
        return self.im.lo == self.im.hi == 0

    def __add__(self, other: "Box") -> "Box":
        return Box(self.re + other.re, self.im + other.im)

    def __neg__(self) -> "Box":
        return Box(-self.re, -self.im)

    def __sub__(self, other: "Box") -> "Box":
        return self + (-other)

    def __mul__(self, other: "Box") -> "Box":
        return Box(self.re * other.re - self.im * other.im,
                   self.re * other.im + self.im * other.re)

    def scale(self, q) -> "Box":
        return Box(self.re.scale(q), self.im.scale(q))

    def conjugate(self) -> "Box":
        return Box(self.re, -self.im)

    def overlaps(self, other: "Box") -> bool:
        return self.re.overlaps(other.re) and self.im.overlaps(other.im)

    def contains_value(self, re: Fraction, im: Fraction = Fraction(0)) -> bool:
        return self.re.contains(re) and self.im.contains(im)


def eval_poly_box(coeffs, box: Box) -> Box:
    """Horner evaluation of a rational-coefficient polynomial on a box."""
    acc = Box.point(0)
    for c in reversed(coeffs):
        acc = acc * box + Box.point(c)
    return acc
