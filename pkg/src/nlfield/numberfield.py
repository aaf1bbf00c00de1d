"""Exact arithmetic in a number field K = Q[x]/(p) with certified embeddings.

A field is defined by a monic irreducible polynomial.  Elements live in
the power basis 1, a, ..., a^(d-1) with exact rational coordinates, so
representations are canonical and equality is literal.  Embeddings into
R and C are certified: every numeric answer comes as a rational-endpoint
box guaranteed to contain the true value, refinable to any width.

Root isolation is delegated to sympy's CRootOf, which isolates real
roots by Sturm-style sign variation and complex roots by certified
interval refinement; we wrap its intervals in our Box type and keep a
monotone per-place cache.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache

import sympy
from sympy.abc import x as _sym_x

from .errors import (
    NotMonicError,
    ReduciblePolynomialError,
    UndecidedNumericallyError,
)
from .intervals import Box, RatInterval, eval_poly_box
from .polys import Poly, poly_xgcd

# Precision ladder: start at 2^-53, square the precision each round,
# give up (UndecidedNumericallyError) below the hard cap.
DEFAULT_START_WIDTH = Fraction(1, 2**53)
DEFAULT_WIDTH_CAP = Fraction(1, 2**2000)

MAX_DESK_DEGREE = 16


def _to_sympoly(p: Poly):
    return sympy.Poly.from_list(
        [sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)],
        _sym_x,
    )


def _from_sympoly(sp) -> Poly:
    return Poly([Fraction(c.p, c.q) for c in reversed(sp.all_coeffs())])


def _rational_parts(val) -> tuple[Fraction, Fraction]:
    """Split an exact sympy rational-complex value into (re, im) Fractions."""
    re, im = val.as_real_imag()
    return Fraction(re.p, re.q), Fraction(im.p, im.q)


def _expr_box(expr, width: Fraction) -> Box:
    """Certified box around an exact algebraic sympy expression.

    CRootOf preprocesses its polynomial (deflation, rescaling), so a
    "root" can come back as a Rational, a bare CRootOf, I, or sums and
    products of those; this evaluates any such combination to a
    rational-endpoint box whose width shrinks to zero with `width`."""
    if expr.is_Rational:
        return Box.point(Fraction(expr.p, expr.q))
    if expr is sympy.I:
        return Box(RatInterval.point(Fraction(0)), RatInterval.point(Fraction(1)))
    if isinstance(expr, sympy.CRootOf):
        half = width / 2
        re, im = _rational_parts(expr.eval_rational(dx=half, dy=half))
        im_iv = (
            RatInterval.point(Fraction(0))
            if expr.is_real
            else RatInterval(im - half, im + half)
        )
        return Box(RatInterval(re - half, re + half), im_iv)
    if expr.is_Add:
        out = Box.point(Fraction(0))
        for arg in expr.args:
            out = out + _expr_box(arg, width)
        return out
    if expr.is_Mul:
        out = Box.point(Fraction(1))
        for arg in expr.args:
            out = out * _expr_box(arg, width)
        return out
    if expr.is_Pow and expr.exp.is_Integer and expr.exp > 0:
        base = _expr_box(expr.base, width)
        out = Box.point(Fraction(1))
        for _ in range(int(expr.exp)):
            out = out * base
        return out
    raise TypeError(f"cannot box algebraic expression {expr!r}")


class Place:
    """An archimedean place: a certified box around one root of the minimal
    polynomial.  Complex places store the representative root with positive
    imaginary part; the conjugate embedding is obtained by reflection."""

    def __init__(self, root, kind: str):
        assert kind in ("real", "complex")
        self.kind = kind
        self._root = root  # sympy CRootOf
        self._box: Box | None = None
        self._width: Fraction | None = None

    @property
    def is_real(self) -> bool:
        return self.kind == "real"

    def box(self, width: Fraction) -> Box:
        """Certified box of width <= width around the defining root.
        Refinement is monotone: a cached finer box is reused as-is."""
        width = Fraction(width)
        if width <= 0:
            raise ValueError("width must be positive")
        if self._box is not None and self._width <= width:
            return self._box
        w = width
        while True:
            box = _expr_box(self._root, w)
            if self.kind == "real":
                # the root is known real; pin the box to the real line
                box = Box(box.re, RatInterval.point(0))
            if box.width <= width:
                break
            w = w * w
        self._box, self._width = box, width
        return box

    def __repr__(self):
        return f"Place({self.kind}, {self._root})"


class NumberField:
    """Q[x]/(minpoly) together with its isolated archimedean places.

    Root isolation is deferred until a place (or the signature) is first
    requested: purely algebraic work — arithmetic, traces, minimal
    polynomials — never pays for it."""

    def __init__(self, minpoly: Poly):
        self.minpoly = minpoly
        self.degree = minpoly.degree
        self._places: list[Place] | None = None
        self._signature: tuple[int, int] | None = None
        self._basis_cache: list[FieldElement] | None = None
        self._sign_cache: dict = {}
        self._minpoly_cache: dict = {}

    def _isolate(self):
        if self._places is not None:
            return
        sp = _to_sympoly(self.minpoly)
        roots = [sympy.CRootOf(sp, i) for i in range(self.degree)]
        real_places = [Place(r, "real") for r in roots if r.is_real]
        complex_reps = [r for r in roots if not r.is_real and _im_sign(r) > 0]
        # CRootOf orders real roots ascending and complex roots by
        # (real part, imaginary part), so this matches the fixed
        # convention: real places ascending, pairs by ascending re then im
        complex_places = [Place(r, "complex") for r in complex_reps]
        r_count, s_count = len(real_places), len(complex_places)
        assert r_count + 2 * s_count == self.degree
        self._places = real_places + complex_places
        self._signature = (r_count, s_count)
        _ensure_disjoint_boxes(self)

    @property
    def places(self) -> list[Place]:
        self._isolate()
        return self._places

    @property
    def signature(self) -> tuple[int, int]:
        self._isolate()
        return self._signature

    # -- constructors ------------------------------------------------

    def element(self, coords) -> "FieldElement":
        cs = tuple(Fraction(c) for c in coords)
        if len(cs) != self.degree:
            raise ValueError(f"need {self.degree} coordinates, got {len(cs)}")
        return FieldElement(self, cs)

    def from_rational(self, q) -> "FieldElement":
        return self.element([q] + [0] * (self.degree - 1))

    @property
    def zero(self) -> "FieldElement":
        return self.from_rational(0)

    @property
    def one(self) -> "FieldElement":
        return self.from_rational(1)

    @property
    def gen(self) -> "FieldElement":
        if self.degree == 1:
            # Q[x]/(x - c): the generator is the rational number c
            return self.from_rational(-self.minpoly.coeffs[0])
        return self.element([0, 1] + [0] * (self.degree - 2))

    def power_basis(self) -> list["FieldElement"]:
        if self._basis_cache is None:
            basis = [self.one]
            for _ in range(1, self.degree):
                basis.append(basis[-1] * self.gen)
            self._basis_cache = basis
        return self._basis_cache

    # -- identity ----------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberField) and self.minpoly == other.minpoly

    def __hash__(self) -> int:
        return hash(self.minpoly)

    def __repr__(self):
        return f"NumberField(deg={self.degree}, minpoly={self.minpoly})"


@dataclass(frozen=True)
class FieldElement:
    field: NumberField
    coords: tuple

    def __post_init__(self):
        assert len(self.coords) == self.field.degree

    # -- arithmetic --------------------------------------------------

    def _check(self, other: "FieldElement"):
        if self.field != other.field:
            from .errors import FieldMismatchError

            raise FieldMismatchError("elements belong to different fields")

    def __add__(self, other) -> "FieldElement":
        other = self._coerce(other)
        self._check(other)
        return FieldElement(
            self.field, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other) -> "FieldElement":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "FieldElement":
        other = self._coerce(other)
        self._check(other)
        prod = Poly(self.coords) * Poly(other.coords)
        red = prod % self.field.minpoly
        cs = list(red.coeffs) + [Fraction(0)] * (self.field.degree - len(red.coeffs))
        return FieldElement(self.field, tuple(cs))

    def __rmul__(self, other) -> "FieldElement":
        return self * other

    def inverse(self) -> "FieldElement":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero field element")
        g, s, _ = poly_xgcd(Poly(self.coords), self.field.minpoly)
        # minpoly irreducible and self nonzero, so the gcd is 1
        assert g == Poly([1])
        red = s % self.field.minpoly
        cs = list(red.coeffs) + [Fraction(0)] * (self.field.degree - len(red.coeffs))
        return FieldElement(self.field, tuple(cs))

    def __truediv__(self, other) -> "FieldElement":
        other = self._coerce(other)
        return self * other.inverse()

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            return other
        return self.field.from_rational(Fraction(other))

    # -- predicates --------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    @property
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def __repr__(self):
        return f"FieldElement({list(self.coords)})"


# -- field construction ---------------------------------------------


def define_field(minpoly: Poly) -> NumberField:
    """Build a number field from a monic irreducible polynomial.  Root
    isolation into certified, pairwise disjoint boxes happens lazily on
    first use of the places."""
    if minpoly.is_zero or minpoly.degree < 1:
        raise ValueError("minimal polynomial must have degree >= 1")
    if not minpoly.is_monic:
        raise NotMonicError(f"minimal polynomial must be monic: {minpoly}")
    if minpoly.degree > MAX_DESK_DEGREE:
        raise ValueError(f"degree {minpoly.degree} exceeds desk scale ({MAX_DESK_DEGREE})")
    sp = _to_sympoly(minpoly)
    _, factors = sp.factor_list()
    if len(factors) > 1 or factors[0][1] > 1:
        bad = _from_sympoly(factors[0][0].monic())
        if bad.degree == minpoly.degree:
            bad = _from_sympoly(factors[-1][0].monic())
        raise ReduciblePolynomialError(bad)
    return NumberField(minpoly)


def _im_sign(root) -> int:
    """Certified sign of the imaginary part of a non-real root."""
    w = Fraction(1, 2**20)
    while True:
        s = _expr_box(root, w).im.sign()
        if s is not None:
            return s
        w = w * w


def _ensure_disjoint_boxes(field: NumberField):
    width = Fraction(1, 2**16)
    while True:
        boxes = [p.box(width) for p in field.places]
        clash = any(
            boxes[i].overlaps(boxes[j])
            for i in range(len(boxes))
            for j in range(i + 1, len(boxes))
        )
        if not clash:
            return
        if width < DEFAULT_WIDTH_CAP:
            raise UndecidedNumericallyError("could not separate root boxes")
        width = width * width


# -- operations ------------------------------------------------------


def elem_arith(op: str, a: FieldElement, b: FieldElement | None = None) -> FieldElement:
    """Dispatch wrapper matching the CLI surface; the operators on
    FieldElement are the primary API."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown op {op!r}")


def absolute_trace(a: FieldElement) -> Fraction:
    """Trace of multiplication-by-a in the power basis, computed exactly."""
    tr = Fraction(0)
    for j, bj in enumerate(a.field.power_basis()):
        tr += (a * bj).coords[j]
    return tr


def minimal_polynomial_of(a: FieldElement) -> Poly:
    """Monic minimal polynomial of a over Q."""
    key = a.coords
    cache = a.field._minpoly_cache
    if key in cache:
        return cache[key]
    d = a.field.degree
    cols = [(a * bj).coords for bj in a.field.power_basis()]
    m = sympy.Matrix(
        d, d, lambda i, j: sympy.Rational(cols[j][i].numerator, cols[j][i].denominator)
    )
    charpoly = m.charpoly(_sym_x)
    _, factors = sympy.Poly(charpoly.as_expr(), _sym_x).factor_list()
    for fac, _mult in factors:
        p = _from_sympoly(fac.monic())
        # evaluate p at a, exactly, inside K
        acc = a.field.zero
        for c in reversed(p.coeffs):
            acc = acc * a + a.field.from_rational(c)
        if acc.is_zero:
            cache[key] = p
            return p
    raise AssertionError("characteristic polynomial has no factor vanishing at a")


def embed(a: FieldElement, place: Place, width: Fraction = DEFAULT_START_WIDTH) -> Box:
    """Certified box of width <= width containing the image of a at the place."""
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    root_w = min(width, DEFAULT_START_WIDTH)
    while True:
        val = eval_poly_box(a.coords, place.box(root_w))
        if val.width <= width:
            return val
        root_w = root_w * root_w


def embed_value(a: FieldElement, place: Place, width=Fraction(1, 2**70)) -> complex:
    """Float approximation of the embedding (midpoint of a certified box)."""
    b = embed(a, place, width)
    if place.is_real:
        return complex(b.re.mid)
    return b.mid


def embed_vector(a: FieldElement, width=Fraction(1, 2**70)) -> list[complex]:
    """Image of a under the diagonal embedding into K_oo, one entry per
    real place followed by one per complex pair representative."""
    return [embed_value(a, p, width) for p in a.field.places]


def trace_on_infinity(field: NumberField, v) -> float:
    """Trace extended to K_oo: sum of real coordinates plus twice the real
    part of each complex-pair coordinate."""
    r, s = field.signature
    v = list(v)
    if len(v) != r + s:
        raise ValueError(f"expected {r} real + {s} complex coordinates")
    total = 0.0
    for val in v[:r]:
        total += float(val.real if isinstance(val, complex) else val)
    for val in v[r:]:
        total += 2.0 * complex(val).real
    return total


def is_in_inverse_different(a: FieldElement) -> bool:
    """Tr(a * Z[alpha]) inside Z, checked exactly on the power basis."""
    return all(
        absolute_trace(a * bj).denominator == 1 for bj in a.field.power_basis()
    )


def is_in_power_order(a: FieldElement) -> bool:
    """Membership in Z[alpha]: all power-basis coordinates integral."""
    return all(c.denominator == 1 for c in a.coords)


# -- convenience fields used throughout the suites -------------------


@lru_cache(maxsize=None)
def rationals() -> NumberField:
    """Q itself, realized as Q[x]/(x)."""
    return define_field(Poly([0, 1]))


@lru_cache(maxsize=None)
def quadratic_field(n: int) -> NumberField:
    """Q(sqrt(n)) for a squarefree nonzero integer n."""
    return define_field(Poly([-n, 0, 1]))


@lru_cache(maxsize=None)
def cyclotomic_field(n: int) -> NumberField:
    """Q(zeta_n), defined by the n-th cyclotomic polynomial."""
    sp = sympy.Poly(sympy.cyclotomic_poly(n, _sym_x), _sym_x)
    return define_field(_from_sympoly(sp))
