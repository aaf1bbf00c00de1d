"""Sign gradings of field elements and of algebra elements.

Real places carry the usual {+,-} grading.  Each complex pair carries a
member of the eight-element sign set: four singular signs (on the real
or imaginary axis, forming Z/4 generated by the quarter turn) and four
quadrant signs (open quadrants, written with a trailing epsilon).  The
product of two quadrant signs is genuinely set-valued: it can overflow
into the neighbouring singular sign and quadrant.

Axis membership is decided exactly, never by thresholding: the embedded
value is matched to a root of its own minimal polynomial, whose realness
is certified, and the purely-imaginary test reduces to realness of the
square with certified negative sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy

from . import coeffs
from .algebra import AlgebraElement
from .errors import SignlessError, UndecidedNumericallyError
from .numberfield import (
    DEFAULT_START_WIDTH,
    DEFAULT_WIDTH_CAP,
    FieldElement,
    NumberField,
    Place,
    _expr_box,
    _to_sympoly,
    embed,
    minimal_polynomial_of,
)
from .intervals import Box

# -- complex signs ---------------------------------------------------

_SINGULAR_NAMES = {0: "+", 1: "sqrt-", 2: "-", 3: "-sqrt-"}
_QUADRANT_NAMES = {0: "+e", 1: "sqrt-e", 2: "-e", 3: "-sqrt-e"}
_NAME_TO_SIGN = {}


@dataclass(frozen=True)
class ComplexSign:
    """e is the exponent of the quarter turn (0..3); eps marks a quadrant
    sign, its absence a singular (axis) sign."""

    e: int
    eps: bool

    def __post_init__(self):
        assert self.e in (0, 1, 2, 3)

    @property
    def kind(self) -> str:
        return "quadrant" if self.eps else "singular"

    @property
    def name(self) -> str:
        return (_QUADRANT_NAMES if self.eps else _SINGULAR_NAMES)[self.e]

    def __repr__(self):
        return self.name


def singular(e: int) -> ComplexSign:
    return ComplexSign(e % 4, False)


def quadrant(e: int) -> ComplexSign:
    return ComplexSign(e % 4, True)


ALL_COMPLEX_SIGNS = tuple(
    [singular(e) for e in range(4)] + [quadrant(e) for e in range(4)]
)
for _s in ALL_COMPLEX_SIGNS:
    _NAME_TO_SIGN[_s.name] = _s


def complex_sign_from_name(name: str) -> ComplexSign:
    return _NAME_TO_SIGN[name]


def sign_product(v1: ComplexSign, v2: ComplexSign) -> frozenset:
    """Set-valued product on the eight complex signs."""
    e = (v1.e + v2.e) % 4
    if not (v1.eps and v2.eps):
        return frozenset({ComplexSign(e, v1.eps or v2.eps)})
    # quadrant times quadrant overflows into the turned singular sign and
    # the turned quadrant
    return frozenset({quadrant(e), singular(e + 1), quadrant(e + 1)})


# -- sign vectors ----------------------------------------------------


@dataclass(frozen=True)
class SignVector:
    """One real sign (+1/-1) per real place, one ComplexSign per pair."""

    reals: tuple
    complexes: tuple

    @property
    def type_vector(self) -> tuple:
        """'1' for singular components, 'e' for quadrant components."""
        return tuple("e" if s.eps else "1" for s in self.complexes)

    def serialize(self) -> list[str]:
        return ["+" if r > 0 else "-" for r in self.reals] + [
            s.name for s in self.complexes
        ]

    @staticmethod
    def deserialize(names: list[str], signature: tuple[int, int]) -> "SignVector":
        r, s = signature
        assert len(names) == r + s
        return SignVector(
            tuple(1 if n == "+" else -1 for n in names[:r]),
            tuple(complex_sign_from_name(n) for n in names[r:]),
        )

    def __repr__(self):
        return "(" + ", ".join(self.serialize()) + ")"


def sign_vector_product(v1: SignVector, v2: SignVector) -> frozenset:
    """Componentwise product; set-valued through the complex components."""
    reals = tuple(a * b for a, b in zip(v1.reals, v2.reals))
    options = [sign_product(a, b) for a, b in zip(v1.complexes, v2.complexes)]
    out = {SignVector(reals, ())}
    for opts in options:
        out = {
            SignVector(reals, v.complexes + (o,)) for v in out for o in opts
        }
    return frozenset(out)


# -- exact sign determination ----------------------------------------


def _root_box(root, width: Fraction) -> Box:
    return _expr_box(root, width)


def _matched_root(alpha: FieldElement, place: Place):
    """The root of minpoly(alpha) equal to the embedding of alpha at the
    place, found by shrinking boxes until exactly one candidate remains."""
    m = minimal_polynomial_of(alpha)
    if m.degree == 1:
        r = -m.coeffs[0]
        return sympy.Rational(r.numerator, r.denominator)
    sp = _to_sympoly(m)
    roots = [sympy.CRootOf(sp, i) for i in range(m.degree)]
    width = DEFAULT_START_WIDTH
    while True:
        target = embed(alpha, place, width)
        cands = [r for r in roots if _root_box(r, width).overlaps(target)]
        if len(cands) == 1:
            return cands[0]
        if width < DEFAULT_WIDTH_CAP:
            raise UndecidedNumericallyError("root matching did not separate")
        width = width * width


def _certified_real_sign(alpha: FieldElement, place: Place) -> int:
    """Sign of a nonzero real embedded value, by interval refinement."""
    width = DEFAULT_START_WIDTH
    while True:
        s = embed(alpha, place, width).re.sign()
        if s is not None:
            return s
        if width < DEFAULT_WIDTH_CAP:
            raise UndecidedNumericallyError("sign refinement hit the width cap")
        width = width * width


def _certified_im_sign(alpha: FieldElement, place: Place) -> int:
    width = DEFAULT_START_WIDTH
    while True:
        s = embed(alpha, place, width).im.sign()
        if s is not None:
            return s
        if width < DEFAULT_WIDTH_CAP:
            raise UndecidedNumericallyError("sign refinement hit the width cap")
        width = width * width


def _is_real_at(alpha: FieldElement, place: Place) -> bool:
    root = _matched_root(alpha, place)
    if getattr(root, "is_Rational", False):
        return True
    return bool(root.is_real)


def _complex_sign_at(alpha: FieldElement, place: Place) -> ComplexSign:
    # Fast path: two rounds of interval refinement settle any value
    # off both axes without touching its minimal polynomial.  The widths
    # stay moderate: squeezing complex root boxes much below 2^-40 costs
    # more than the exact fallback it would save.
    width = DEFAULT_START_WIDTH
    for _ in range(2):
        box = embed(alpha, place, width)
        re_s, im_s = box.re.sign(), box.im.sign()
        if re_s is not None and im_s is not None:
            return {(1, 1): quadrant(0), (-1, 1): quadrant(1),
                    (-1, -1): quadrant(2), (1, -1): quadrant(3)}[(re_s, im_s)]
        width = width * DEFAULT_START_WIDTH
    # Near (or on) an axis: decide exactly through root matching.
    if _is_real_at(alpha, place):
        return singular(0) if _certified_real_sign(alpha, place) > 0 else singular(2)
    if _is_real_at(alpha * alpha, place):
        # square is real and alpha is not: alpha lies on the imaginary axis
        assert _certified_real_sign(alpha * alpha, place) < 0
        return singular(1) if _certified_im_sign(alpha, place) > 0 else singular(3)
    # off both axes: the quadrant is readable from a refined box
    re_s = _certified_real_sign(alpha, place)
    im_s = _certified_im_sign(alpha, place)
    return {(1, 1): quadrant(0), (-1, 1): quadrant(1),
            (-1, -1): quadrant(2), (1, -1): quadrant(3)}[(re_s, im_s)]


def sign_of(alpha: FieldElement) -> SignVector:
    """Certified sign vector of a nonzero field element."""
    if alpha.is_zero:
        raise SignlessError("the zero element has no sign")
    cache = alpha.field._sign_cache
    if alpha.coords in cache:
        return cache[alpha.coords]
    r, s = alpha.field.signature
    reals = tuple(
        _certified_real_sign(alpha, p) for p in alpha.field.places[:r]
    )
    complexes = tuple(
        _complex_sign_at(alpha, p) for p in alpha.field.places[r:]
    )
    v = SignVector(reals, complexes)
    cache[alpha.coords] = v
    return v


# -- graded decomposition --------------------------------------------


@dataclass(frozen=True)
class GradedDecomposition:
    field: NumberField
    mode: str
    components: dict  # SignVector -> AlgebraElement
    constant: object  # coefficient of the zero index

    def reassemble(self) -> AlgebraElement:
        out = AlgebraElement(self.field, self.mode, {self.field.zero: self.constant})
        for part in self.components.values():
            out = out + part
        return out


def grade(f: AlgebraElement) -> GradedDecomposition:
    """Split an element by the sign vectors of its nonzero indices.
    Components are keyed lazily by the signs actually observed."""
    comps: dict = {}
    for idx, c in f.terms.items():
        if idx.is_zero:
            continue
        v = sign_of(idx)
        bucket = comps.setdefault(v, {})
        bucket[idx] = c
    return GradedDecomposition(
        f.field,
        f.mode,
        {v: AlgebraElement(f.field, f.mode, t) for v, t in comps.items()},
        f.constant,
    )


def restrict(f: AlgebraElement, v: SignVector) -> AlgebraElement:
    """Sub-sum of terms whose index carries the sign vector v."""
    return AlgebraElement(
        f.field,
        f.mode,
        {i: c for i, c in f.terms.items() if not i.is_zero and sign_of(i) == v},
    )


def check_graded_dirichlet_law(f: AlgebraElement, g: AlgebraElement) -> dict:
    """Verify the graded decomposition law of the Dirichlet product:
    each sign component of f (x) g equals the sum over sign factorizations,
    restricted along the set-valued complex sign product.  The constant
    term is compared against both the convolution rule and the printed
    closed formula T(f)T(g) - f0*g0 (which disagree in general; the
    convolution rule is normative)."""
    h = f.dirichlet(g)
    gh = grade(h)
    gf, gg = grade(f), grade(g)
    rhs: dict = {}
    for v1, f1 in gf.components.items():
        for v2, g2 in gg.components.items():
            prod = f1.dirichlet(g2)
            for v in sign_vector_product(v1, v2):
                part = restrict(prod, v)
                if part.is_zero:
                    continue
                rhs[v] = rhs.get(v, AlgebraElement(f.field, f.mode, {})) + part
    mismatches = []
    for v in set(gh.components) | set(rhs):
        lhs_c = gh.components.get(v, AlgebraElement(f.field, f.mode, {}))
        rhs_c = rhs.get(v, AlgebraElement(f.field, f.mode, {}))
        if lhs_c != rhs_c:
            mismatches.append(
                {"sign": v.serialize(), "lhs": repr(lhs_c), "rhs": repr(rhs_c)}
            )
    d0 = h.constant
    t = coeffs.to_complex
    printed = t(f.trace()) * t(g.trace()) - t(f.constant) * t(g.constant)
    return {
        "check": "graded_dirichlet_law",
        "component_mismatches": mismatches,
        "matches": not mismatches,
        "d0_rule": t(d0),
        "d0_printed_formula": printed,
    }
