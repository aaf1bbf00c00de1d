"""Coefficient arithmetic for the field algebra.

Two modes exist and never mix inside one element:

  exact  -- Gaussian rationals a + b*i with Fraction parts; never rounds.
  approx -- python complex at double precision, for flows and Hardy numerics.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

EXACT = "exact"
APPROX = "approx"


@dataclass(frozen=True)
class GaussRat:
    """Gaussian rational a + b*i."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @staticmethod
    def of(v) -> "GaussRat":
        if isinstance(v, GaussRat):
            return v
        if isinstance(v, complex):
            raise TypeError("complex floats are approx-mode values")
        return GaussRat(Fraction(v))

    def __add__(self, other: "GaussRat") -> "GaussRat":
        return GaussRat(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussRat") -> "GaussRat":
        return GaussRat(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussRat":
        return GaussRat(-self.re, -self.im)

    def __mul__(self, other: "GaussRat") -> "GaussRat":
        return GaussRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __truediv__(self, other: "GaussRat") -> "GaussRat":
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussRat(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def conjugate(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def to_complex(self) -> complex:
        return complex(self.re) + 1j * complex(self.im)

    def __repr__(self):
        if self.im == 0:
            return str(self.re)
        return f"({self.re}{'+' if self.im >= 0 else ''}{self.im}i)"


def coerce(value, mode: str):
    """Bring a raw value into the arithmetic of the given mode."""
    if mode == EXACT:
        return GaussRat.of(value)
    if mode == APPROX:
        if isinstance(value, GaussRat):
            return value.to_complex()
        return complex(value)
    raise ValueError(f"unknown mode {mode!r}")


def is_zero(value) -> bool:
    if isinstance(value, GaussRat):
        return value.is_zero
    return value == 0


def zero(mode: str):
    return GaussRat() if mode == EXACT else 0j


def one(mode: str):
    return GaussRat(Fraction(1)) if mode == EXACT else 1 + 0j


def to_complex(value) -> complex:
    if isinstance(value, GaussRat):
        return value.to_complex()
    return complex(value)
