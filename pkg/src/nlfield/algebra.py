"""The field algebra C[K]: finitely supported sums over field elements.

An element is a finite map from Fourier indices (elements of K) to
coefficients, carrying the Cauchy product (additive convolution of
indices), the Dirichlet product (multiplicative convolution with a
special constant-term rule), the trace functional T = coefficient sum,
and trace-normalized projectivization.  The two products do not
distribute over one another; T is multiplicative under both.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import coeffs
from .coeffs import APPROX, EXACT
from .errors import (
    FieldMismatchError,
    ModeMismatchError,
    NotProjectivizableError,
)
from .numberfield import FieldElement, NumberField


class AlgebraElement:
    __slots__ = ("field", "mode", "terms")

    def __init__(self, field: NumberField, mode: str, terms: dict | None = None):
        if mode not in (EXACT, APPROX):
            raise ValueError(f"unknown mode {mode!r}")
        self.field = field
        self.mode = mode
        clean = {}
        for idx, c in (terms or {}).items():
            if idx.field != field:
                raise FieldMismatchError("index from a different field")
            c = coeffs.coerce(c, mode)
            if not coeffs.is_zero(c):
                clean[idx] = c
        self.terms = clean

    # -- basics ------------------------------------------------------

    @property
    def support(self):
        return set(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, idx: FieldElement):
        return self.terms.get(idx, coeffs.zero(self.mode))

    @property
    def constant(self):
        return self.coeff(self.field.zero)

    def _check(self, other: "AlgebraElement"):
        if self.field != other.field:
            raise FieldMismatchError("elements over different fields")
        if self.mode != other.mode:
            raise ModeMismatchError(f"cannot mix {self.mode} and {other.mode}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and self.field == other.field
            and self.mode == other.mode
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, self.mode, frozenset(self.terms.items())))

    def __repr__(self):
        if self.is_zero:
            return "AlgebraElement(0)"
        parts = [f"{c!r}*z^{list(i.coords)}" for i, c in self.terms.items()]
        return "AlgebraElement(" + " + ".join(parts) + ")"

    # -- linear structure (plain coefficient addition) ---------------

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        out = dict(self.terms)
        for idx, c in other.terms.items():
            out[idx] = out.get(idx, coeffs.zero(self.mode)) + c
        return AlgebraElement(self.field, self.mode, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(
            self.field, self.mode, {i: -c for i, c in self.terms.items()}
        )

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, scalar) -> "AlgebraElement":
        s = coeffs.coerce(scalar, self.mode)
        return AlgebraElement(
            self.field, self.mode, {i: c * s for i, c in self.terms.items()}
        )

    # -- the two products --------------------------------------------

    def cauchy(self, other: "AlgebraElement") -> "AlgebraElement":
        """Cauchy product: additive convolution of indices."""
        self._check(other)
        out: dict = {}
        for i1, c1 in self.terms.items():
            for i2, c2 in other.terms.items():
                idx = i1 + i2
                prod = c1 * c2
                out[idx] = out.get(idx, coeffs.zero(self.mode)) + prod
        return AlgebraElement(self.field, self.mode, out)

    def dirichlet(self, other: "AlgebraElement") -> "AlgebraElement":
        """Dirichlet product: multiplicative convolution of nonzero indices,
        with constant term a0*sum(b) + b0*sum(a) + a0*b0 over nonzero
        indices of the partner."""
        self._check(other)
        zero_idx = self.field.zero
        out: dict = {}
        sum_a = coeffs.zero(self.mode)
        sum_b = coeffs.zero(self.mode)
        for i1, c1 in self.terms.items():
            if i1.is_zero:
                continue
            sum_a = sum_a + c1
            for i2, c2 in other.terms.items():
                if i2.is_zero:
                    continue
                idx = i1 * i2
                out[idx] = out.get(idx, coeffs.zero(self.mode)) + c1 * c2
        for i2, c2 in other.terms.items():
            if not i2.is_zero:
                sum_b = sum_b + c2
        a0 = self.constant
        b0 = other.constant
        d0 = a0 * sum_b + b0 * sum_a + a0 * b0
        if not coeffs.is_zero(d0):
            out[zero_idx] = out.get(zero_idx, coeffs.zero(self.mode)) + d0
        return AlgebraElement(self.field, self.mode, out)

    def compose_index(self, alpha: FieldElement) -> "AlgebraElement":
        """Reindex every term by multiplying its index with alpha; equals
        the Dirichlet product with the unit monomial at alpha."""
        if alpha.is_zero:
            raise ValueError("alpha = 0 is handled by the Dirichlet constant rule")
        return AlgebraElement(
            self.field, self.mode, {i * alpha: c for i, c in self.terms.items()}
        )

    # -- trace, ideal, projectivization ------------------------------

    def trace(self):
        t = coeffs.zero(self.mode)
        for c in self.terms.values():
            t = t + c
        return t

    def is_in_ideal(self, tol: float = 1e-12) -> bool:
        t = self.trace()
        if self.mode == EXACT:
            return coeffs.is_zero(t)
        return abs(t) <= tol

    def projectivize(self) -> "ProjectiveClass":
        t = self.trace()
        if coeffs.is_zero(t):
            raise NotProjectivizableError("zero-trace element is not projectivizable")
        inv = (
            coeffs.one(self.mode) / t
            if self.mode == EXACT
            else 1.0 / t
        )
        return ProjectiveClass(self.scale(inv))


@dataclass(frozen=True)
class ProjectiveClass:
    """A projective class represented by its trace-one element."""

    representative: AlgebraElement

    def __post_init__(self):
        t = self.representative.trace()
        if self.representative.mode == EXACT:
            assert t == coeffs.one(EXACT)
        else:
            assert abs(t - 1.0) < 1e-9

    def __eq__(self, other):
        return isinstance(other, ProjectiveClass) and projective_eq(
            self.representative, other.representative
        )

    def __hash__(self):
        return hash(frozenset(self.representative.terms))


# -- constructors ----------------------------------------------------


def zero_element(field: NumberField, mode: str = EXACT) -> AlgebraElement:
    return AlgebraElement(field, mode, {})


def monomial(alpha: FieldElement, coeff=1, mode: str = EXACT) -> AlgebraElement:
    return AlgebraElement(alpha.field, mode, {alpha: coeff})


def id_add(field: NumberField, mode: str = EXACT) -> AlgebraElement:
    """Identity of the Cauchy product: the unit monomial at index 0."""
    return monomial(field.zero, 1, mode)


def id_mul(field: NumberField, mode: str = EXACT) -> AlgebraElement:
    """Identity of the Dirichlet product: the unit monomial at index 1."""
    return monomial(field.one, 1, mode)


# -- projective comparison -------------------------------------------


def projective_eq(f: AlgebraElement, g: AlgebraElement, tol: float = 1e-12) -> bool:
    """True iff f = lambda * g for some nonzero scalar, by cross-multiplying
    coefficient pairs (works for zero-trace elements too)."""
    if f.field != g.field or f.mode != g.mode:
        return False
    if f.is_zero or g.is_zero:
        return f.is_zero and g.is_zero
    if f.support != g.support:
        return False
    items = list(f.terms)
    k0 = items[0]
    fa, ga = f.terms[k0], g.terms[k0]
    if f.mode == EXACT:
        return all(f.terms[k] * ga == g.terms[k] * fa for k in items[1:])
    scale = max(abs(coeffs.to_complex(c)) for c in f.terms.values()) * max(
        abs(coeffs.to_complex(c)) for c in g.terms.values()
    )
    return all(
        abs(f.terms[k] * ga - g.terms[k] * fa) <= tol * max(scale, 1.0)
        for k in items[1:]
    )


# -- functional aliases matching the operation surface ---------------


def cauchy_product(f: AlgebraElement, g: AlgebraElement) -> AlgebraElement:
    return f.cauchy(g)


def dirichlet_product(f: AlgebraElement, g: AlgebraElement) -> AlgebraElement:
    return f.dirichlet(g)


def trace_functional(f: AlgebraElement):
    return f.trace()


def is_in_ideal(f: AlgebraElement) -> bool:
    return f.is_in_ideal()


def projectivize(f: AlgebraElement) -> ProjectiveClass:
    return f.projectivize()


def monomial_compose(f: AlgebraElement, alpha: FieldElement) -> AlgebraElement:
    return f.compose_index(alpha)
