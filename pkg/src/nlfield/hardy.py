"""Analytic evaluation: characters, hyperbolic series, Hardy membership.

A character of the Minkowski torus is z -> exp(2 pi i Tr(alpha z)) for
alpha in the inverse different.  On the hyperbolization each real place
contributes exp(2 pi i a tau) and each complex pair contributes
exp(4 pi i Re(w z)) exp(-4 pi Im(w b)), with b in the open quarter
plane.  Graded components are evaluated after conjugating the point so
that every term of the component decays; see the note at c_inverse
below for why the conjugation uses the inverse quarter turn.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import coeffs
from .algebra import AlgebraElement
from .errors import BandwidthError, FieldMismatchError
from .numberfield import (
    FieldElement,
    NumberField,
    absolute_trace,
    embed_vector,
    is_in_inverse_different,
    trace_on_infinity,
)
from .signs import GradedDecomposition, grade, quadrant, sign_of

EPS = 2.0 ** -52


@dataclass(frozen=True)
class EvalResult:
    value: complex
    bound: float

    def __repr__(self):
        return f"EvalResult({self.value!r}, bound={self.bound:.3e})"


@dataclass(frozen=True)
class HyperPoint:
    """A point of the hyperbolization: one upper-half-plane coordinate
    tau per real place, one (z, b) pair per complex place with b in the
    open quarter plane Re b > 0, Im b > 0."""

    reals: tuple
    complexes: tuple

    def __post_init__(self):
        for tau in self.reals:
            if not complex(tau).imag > 0:
                raise ValueError("real-place coordinate must have Im > 0")
        for _, b in self.complexes:
            b = complex(b)
            if not (b.real > 0 and b.imag > 0):
                raise ValueError("quarter-plane coordinate must have Re, Im > 0")

    @staticmethod
    def uniform(field: NumberField, x=0.0, t=1.0) -> "HyperPoint":
        """The point with every tau = x + it and every pair (x, t + it)."""
        r, s = field.signature
        return HyperPoint(
            tuple(complex(x, t) for _ in range(r)),
            tuple((complex(x), complex(t, t)) for _ in range(s)),
        )


@dataclass(frozen=True)
class TorusPoint:
    """A point of the Minkowski torus in power-basis coordinates, each
    reduced to the fundamental domain [0, 1)."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "coords", tuple(Fraction(c) % 1 for c in self.coords)
        )


def character_eval(alpha: FieldElement, z) -> EvalResult:
    """exp(2 pi i Tr(alpha * z)) for a K-infinity vector z (one entry
    per place, complex entries at complex places)."""
    emb = embed_vector(alpha)
    if len(z) != len(emb):
        raise ValueError("vector length must equal the number of places")
    prod = [a * complex(w) for a, w in zip(emb, z)]
    tr = trace_on_infinity(alpha.field, prod)
    value = cmath.exp(2j * math.pi * tr)
    bound = (2 * math.pi * abs(tr) + 2) * EPS
    return EvalResult(value, bound)


def character_eval_torus(alpha: FieldElement, p: TorusPoint) -> EvalResult:
    """Character at a torus point: exp(2 pi i c . n(alpha)) where
    n_j(alpha) = Tr(alpha a^j) is the pairing of alpha with the power
    basis (integer for alpha in the inverse different)."""
    n = _dual_vector(alpha)
    arg = sum(Fraction(c) * nj for c, nj in zip(p.coords, n))
    value = cmath.exp(2j * math.pi * float(arg))
    return EvalResult(value, (2 * math.pi * abs(float(arg)) + 2) * EPS)


def _dual_vector(alpha: FieldElement):
    """Pairing of alpha against the power basis: (Tr(alpha a^j))_j."""
    return [absolute_trace(alpha * b) for b in alpha.field.power_basis()]


# -- hyperbolic series evaluation ------------------------------------


def c_inverse(e_exp: int) -> complex:
    """Quarter-turn factor applied to b when evaluating a component of
    singular exponent e_exp.  The inverse turn i^(-e) is used rather
    than the direct turn i^e: with the direct turn the sqrt- and
    -sqrt- components acquire growing factors (Im(i a i b) = -Im(ab) < 0
    for a, b in the quarter plane), while the inverse turn makes every
    term of every component decay, which is what the grading is for."""
    return 1j ** (-e_exp % 4)


def series_eval_hyper(
    f: AlgebraElement, p: HyperPoint, graded: GradedDecomposition | None = None
) -> EvalResult:
    """Evaluate a finitely supported series at a hyperbolization point,
    component by component with the component's own conjugation."""
    r, s = f.field.signature
    if len(p.reals) != r or len(p.complexes) != s:
        raise FieldMismatchError("point shape does not match the field signature")
    if graded is None:
        graded = grade(f)
    total = coeffs.to_complex(graded.constant)
    bound = 2 * EPS
    for v, part in graded.components.items():
        for idx, c in part.terms.items():
            emb = embed_vector(idx)
            term = coeffs.to_complex(c)
            phase_size = 0.0
            for j in range(r):
                a = emb[j].real
                tau = complex(p.reals[j])
                theta = v.reals[j]
                # exp(2 pi i a (x + theta i t)): modulus exp(-2 pi |a| t)
                term *= cmath.exp(2j * math.pi * a * complex(tau.real, theta * tau.imag))
                phase_size += 2 * math.pi * abs(a) * (abs(tau.real) + tau.imag)
            for j in range(s):
                w = complex(emb[r + j])
                z, b = (complex(p.complexes[j][0]), complex(p.complexes[j][1]))
                e_inv = c_inverse(v.complexes[j].e)
                term *= cmath.exp(4j * math.pi * (w * z).real)
                term *= math.exp(-4 * math.pi * (w * e_inv * b).imag)
                phase_size += 4 * math.pi * abs(w) * (abs(z) + abs(b))
            total += term
            bound += abs(term) * (phase_size + 4) * EPS
    return EvalResult(total, bound)


def series_eval_boundary(f: AlgebraElement, x) -> EvalResult:
    """Boundary character sum at a K-infinity vector x (all t = 0)."""
    total = coeffs.to_complex(f.constant)
    bound = 2 * EPS
    for idx, c in f.terms.items():
        if idx.is_zero:
            continue
        res = character_eval(idx, x)
        total += coeffs.to_complex(c) * res.value
        bound += abs(coeffs.to_complex(c)) * (res.bound + 2 * EPS)
    return EvalResult(total, bound)


# -- positive cone and Hardy membership ------------------------------


def in_positive_cone(alpha: FieldElement) -> bool:
    """True iff all real embeddings are positive and every complex
    representative lies in the open first quadrant.  Axis cases are
    decided exactly through sign_of."""
    if alpha.is_zero:
        return False
    v = sign_of(alpha)
    return all(x > 0 for x in v.reals) and all(
        c == quadrant(0) for c in v.complexes
    )


def hardy_membership(f: AlgebraElement) -> bool:
    """Support condition for the Hardy space: every nonzero index lies
    in the positive cone."""
    return all(
        in_positive_cone(idx) for idx in f.terms if not idx.is_zero
    )


def l2_norm(f: AlgebraElement) -> float:
    """Coefficient l2 norm sqrt(sum |a_alpha|^2)."""
    if f.mode == coeffs.EXACT:
        total = sum((c.abs2() for c in f.terms.values()), Fraction(0))
        return math.sqrt(total)
    return math.sqrt(sum(abs(c) ** 2 for c in f.terms.values()))


# -- torus quadrature ------------------------------------------------


def torus_inner_product(f: AlgebraElement, g: AlgebraElement, grid: int) -> EvalResult:
    """Equal-weight tensor quadrature of f gbar over the fundamental
    domain of the power-basis lattice.  Exact (up to floating error) for
    trigonometric polynomials once grid exceeds twice the bandwidth."""
    f._check(g)
    d = f.field.degree
    specs = []
    band = 0
    for h in (f, g):
        for idx in h.terms:
            if not idx.is_zero and not is_in_inverse_different(idx):
                raise ValueError(
                    "indices must lie in the inverse different to define "
                    "functions on the torus"
                )
    for h in (f, g):
        terms = []
        for idx, c in h.terms.items():
            n = _dual_vector(idx)
            ints = []
            for q in n:
                assert q.denominator == 1
                ints.append(int(q))
                band = max(band, abs(int(q)))
            terms.append((ints, coeffs.to_complex(c)))
        specs.append(terms)
    if grid < 2 * band + 1:
        raise BandwidthError(
            f"grid {grid} per dimension cannot resolve bandwidth {band}; "
            f"need at least {2 * band + 1}"
        )
    axis = np.arange(grid) / grid
    unit = np.exp(2j * np.pi * axis)

    def values(terms):
        out = np.zeros((grid,) * d, dtype=complex)
        for ints, c in terms:
            cell = np.ones((), dtype=complex)
            for j, nj in enumerate(ints):
                shape = [1] * d
                shape[j] = grid
                cell = cell * (unit ** nj).reshape(shape)
            out = out + c * cell
        return out

    fv = values(specs[0])
    gv = values(specs[1])
    value = complex(np.mean(fv * np.conj(gv)))
    scale = float(np.max(np.abs(fv)) * np.max(np.abs(gv)) + 1.0)
    return EvalResult(value, scale * grid ** d * EPS)
