"""Integer-indexed Dirichlet series: convolution, inversion, Mellin sums.

The rational field's algebra restricted to positive integer indices is
the classical setting: c_n = sum_{d|n} a_d b_{n/d}, Moebius-style
inversion by the standard recursion, and the finite Mellin evaluation
D_f(y) = sum a_n n^(-2 pi i y).  Divisors are enumerated through a
smallest-prime-factor sieve shared by all series of the same bound.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

from . import coeffs
from .algebra import AlgebraElement
from .coeffs import EXACT
from .errors import NotInvertibleError
from .numberfield import rationals


@lru_cache(maxsize=8)
def _spf_sieve(n: int) -> tuple:
    """Smallest prime factor for every integer up to n."""
    spf = list(range(n + 1))
    i = 2
    while i * i <= n:
        if spf[i] == i:
            for j in range(i * i, n + 1, i):
                if spf[j] == j:
                    spf[j] = i
        i += 1
    return tuple(spf)


def divisors_of(n: int, bound: int) -> list[int]:
    """All divisors of n, via the shared sieve."""
    spf = _spf_sieve(bound)
    divs = [1]
    while n > 1:
        p = spf[n]
        k = 0
        while n % p == 0:
            n //= p
            k += 1
        divs = [d * p ** e for d in divs for e in range(k + 1)]
    return sorted(divs)


class IntegerSeries:
    """Coefficients a_1..a_N of a Dirichlet series truncated at N."""

    __slots__ = ("N", "mode", "a")

    def __init__(self, N: int, values, mode: str = EXACT):
        if N < 1:
            raise ValueError("truncation bound must be at least 1")
        self.N = N
        self.mode = mode
        vals = list(values)
        if len(vals) != N:
            raise ValueError(f"need {N} coefficients, got {len(vals)}")
        self.a = [coeffs.coerce(v, mode) for v in vals]

    def __getitem__(self, n: int):
        if not 1 <= n <= self.N:
            raise IndexError(f"index {n} outside 1..{self.N}")
        return self.a[n - 1]

    def __eq__(self, other):
        return (
            isinstance(other, IntegerSeries)
            and self.N == other.N
            and self.mode == other.mode
            and self.a == other.a
        )

    def __repr__(self):
        head = ", ".join(repr(c) for c in self.a[:6])
        tail = ", ..." if self.N > 6 else ""
        return f"IntegerSeries(N={self.N}, [{head}{tail}])"

    @staticmethod
    def delta(N: int, mode: str = EXACT) -> "IntegerSeries":
        """The Dirichlet identity: 1 at n=1, zero elsewhere."""
        return IntegerSeries(N, [1] + [0] * (N - 1), mode)

    @staticmethod
    def ones(N: int, mode: str = EXACT) -> "IntegerSeries":
        return IntegerSeries(N, [1] * N, mode)

    def support(self) -> list[int]:
        return [n for n in range(1, self.N + 1) if not coeffs.is_zero(self[n])]


def from_algebra(f: AlgebraElement, N: int) -> IntegerSeries:
    """Copy an algebra element over Q with positive-integer support."""
    if f.field != rationals():
        raise ValueError("integer series require the rational field")
    vals = [coeffs.zero(f.mode)] * N
    for idx, c in f.terms.items():
        q = idx.as_rational()
        if q.denominator != 1 or q <= 0:
            raise ValueError(f"index {q} is not a positive integer")
        if q > N:
            raise ValueError(f"index {q} exceeds the truncation bound {N}")
        vals[int(q) - 1] = c
    return IntegerSeries(N, vals, f.mode)


def to_algebra(s: IntegerSeries) -> AlgebraElement:
    Q = rationals()
    return AlgebraElement(
        Q, s.mode, {Q.from_rational(n): s[n] for n in s.support()}
    )


def dconv(f: IntegerSeries, g: IntegerSeries) -> IntegerSeries:
    """Dirichlet convolution c_n = sum_{d|n} a_d b_{n/d}, truncated."""
    if f.N != g.N or f.mode != g.mode:
        raise ValueError("series must share bound and mode")
    N = f.N
    out = [coeffs.zero(f.mode)] * N
    for n in range(1, N + 1):
        acc = coeffs.zero(f.mode)
        for d in divisors_of(n, N):
            acc = acc + f[d] * g[n // d]
        out[n - 1] = acc
    return IntegerSeries(N, out, f.mode)


def dinvert(f: IntegerSeries) -> IntegerSeries:
    """Dirichlet inverse: dconv(f, result) = delta_1 up to N."""
    if coeffs.is_zero(f[1]):
        raise NotInvertibleError("leading coefficient a_1 is zero")
    N = f.N
    one = coeffs.one(f.mode)
    inv_a1 = one / f[1] if f.mode == EXACT else 1.0 / f[1]
    b = [coeffs.zero(f.mode)] * N
    b[0] = one * inv_a1
    for n in range(2, N + 1):
        acc = coeffs.zero(f.mode)
        for d in divisors_of(n, N):
            if d < n:
                acc = acc + b[d - 1] * f[n // d]
        b[n - 1] = -(acc * inv_a1)
    return IntegerSeries(N, b, f.mode)


def mellin_eval(f: IntegerSeries, y: float) -> complex:
    """D_f(y) = sum a_n n^(-2 pi i y), a finite unitary-character sum."""
    total = 0j
    for n in f.support():
        total += coeffs.to_complex(f[n]) * cmath.exp(-2j * math.pi * y * math.log(n))
    return total
