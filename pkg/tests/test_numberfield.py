"""Exact field arithmetic, places, traces, and the inverse different."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nlfield.errors import NotMonicError, ReduciblePolynomialError
from nlfield.numberfield import (
    absolute_trace,
    cyclotomic_field,
    define_field,
    embed,
    embed_value,
    is_in_inverse_different,
    is_in_power_order,
    minimal_polynomial_of,
    quadratic_field,
    rationals,
)
from nlfield.polys import Poly

small_rats = st.fractions(
    min_value=-10, max_value=10, max_denominator=8
)


def test_define_field_rejects_non_monic():
    with pytest.raises(NotMonicError):
        define_field(Poly([1, 0, 2]))


def test_define_field_rejects_reducible():
    with pytest.raises(ReduciblePolynomialError) as err:
        define_field(Poly([-1, 0, 1]))  # x^2 - 1 = (x-1)(x+1)
    assert "factor" in str(err.value)


def test_signatures():
    assert quadratic_field(2).signature == (2, 0)
    assert quadratic_field(-1).signature == (0, 1)
    assert cyclotomic_field(5).signature == (0, 2)
    assert rationals().signature == (1, 0)


def test_place_ordering_real_roots_ascending():
    K = quadratic_field(2)
    b0 = embed(K.gen, K.places[0], Fraction(1, 2 ** 30))
    b1 = embed(K.gen, K.places[1], Fraction(1, 2 ** 30))
    # the first place carries the smaller root, here -sqrt(2)
    assert b0.re.hi < 0 < b1.re.lo


def test_inverse_fixture():
    # (1 + sqrt2)^(-1) = -1 + sqrt2
    K = quadratic_field(2)
    e = (K.one + K.gen).inverse()
    assert e.coords == (Fraction(-1), Fraction(1))
    assert (e * (K.one + K.gen)) == K.one


def test_trace_fixtures():
    K = quadratic_field(2)
    assert absolute_trace(K.gen) == 0
    assert absolute_trace(K.one + K.gen) == 2
    z5 = cyclotomic_field(5)
    assert absolute_trace(z5.gen) == -1


def test_minimal_polynomial_of_generator_and_rational():
    K = quadratic_field(2)
    assert minimal_polynomial_of(K.gen) == Poly([-2, 0, 1])
    assert minimal_polynomial_of(K.from_rational(Fraction(3, 4))) == Poly(
        [Fraction(-3, 4), 1]
    )


def test_minimal_polynomial_of_non_generator():
    # 1 + sqrt2 has minpoly x^2 - 2x - 1
    K = quadratic_field(2)
    assert minimal_polynomial_of(K.one + K.gen) == Poly([-1, -2, 1])


def test_embed_value_accuracy():
    K = quadratic_field(2)
    v = embed_value(K.one + K.gen, K.places[1])
    assert abs(v - (1 + 2 ** 0.5)) < 1e-12


def test_inverse_different_quadratic():
    # d^-1 of Z[sqrt2] is (1 / 2 sqrt2) Z[sqrt2]
    K = quadratic_field(2)
    half_over = K.gen.inverse() * K.from_rational(Fraction(1, 2))
    assert is_in_inverse_different(half_over)
    assert not is_in_inverse_different(K.from_rational(Fraction(1, 3)))
    assert is_in_inverse_different(K.one)


def test_power_order_membership():
    K = quadratic_field(2)
    assert is_in_power_order(K.one + K.gen)
    assert not is_in_power_order(K.from_rational(Fraction(1, 2)))


@given(a=small_rats, b=small_rats, c=small_rats, d=small_rats)
@settings(max_examples=60, deadline=None)
def test_field_arithmetic_is_a_homomorphism_to_floats(a, b, c, d):
    K = quadratic_field(2)
    x = K.element([a, b])
    y = K.element([c, d])
    p = K.places[1]
    lhs = embed_value(x * y, p)
    rhs = embed_value(x, p) * embed_value(y, p)
    assert abs(lhs - rhs) < 1e-9


@given(a=small_rats, b=small_rats)
@settings(max_examples=60, deadline=None)
def test_inverse_round_trip(a, b):
    K = quadratic_field(2)
    x = K.element([a, b])
    if x.is_zero:
        return
    assert x * x.inverse() == K.one


@given(a=small_rats, b=small_rats, c=small_rats, d=small_rats)
@settings(max_examples=40, deadline=None)
def test_trace_is_additive(a, b, c, d):
    K = cyclotomic_field(4)
    x, y = K.element([a, b]), K.element([c, d])
    assert absolute_trace(x + y) == absolute_trace(x) + absolute_trace(y)
