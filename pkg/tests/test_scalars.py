from fractions import Fraction

import pytest
from hypothesis import given, settings

from hetnil.scalars import ONE, ZERO, Scalar, ScalarError, symbols

import strategies as S

x, y, z = symbols("x y z")


def test_zero_coefficients_are_dropped():
    assert Scalar({(("x", 1),): 0}) == ZERO
    assert (x - x).is_zero()
    assert x + 0 == x


def test_constants_and_equality_with_numbers():
    assert Scalar.const(Fraction(3, 4)) == Fraction(3, 4)
    assert (2 * x - x - x) == 0
    assert ONE.constant_value() == 1
    with pytest.raises(ScalarError):
        x.constant_value()


def test_canonical_printing():
    p = 3 * x ** 2 * y - Fraction(1, 2) * y + x ** 3 - 7
    assert p.to_str() == "x^3 + 3*x^2*y - 1/2*y - 7"
    assert (-x).to_str() == "-x"
    assert ZERO.to_str() == "0"
    assert (x + y).to_str(order=["y", "x"]) == "y + x"


def test_parse_matches_arithmetic():
    assert Scalar.parse("(x + 1)^2 - 2*x", ["x"]) == x ** 2 + 1
    assert Scalar.parse("3/4") == Fraction(3, 4)


def test_eval_and_substitute():
    p = x ** 2 + x * y
    assert p.eval({"x": 2, "y": Fraction(1, 2)}) == 5
    assert p.substitute({"y": x}) == 2 * x ** 2
    with pytest.raises(ScalarError):
        p.eval({"x": 1})


def test_reduce_square():
    p = x ** 5 + x ** 2 * y
    assert p.reduce_square("x", y + 1) == x * (y + 1) ** 2 + (y + 1) * y
    with pytest.raises(ScalarError):
        p.reduce_square("x", x)


def test_exact_quotient():
    f = (x - y) * z
    assert ((x ** 2 - y ** 2) * z).exact_quotient(f) == x + y
    assert (x * z).exact_quotient(f) is None
    assert ZERO.exact_quotient(f) == ZERO
    with pytest.raises(ZeroDivisionError):
        x.exact_quotient(ZERO)


def test_content_and_leading_coefficient():
    p = Fraction(2, 3) * x + Fraction(4, 9)
    assert p.content() == Fraction(2, 9)
    assert (-2 * x + 1).leading_coefficient() == -2


def test_division_only_by_constants():
    assert (2 * x) / 2 == x
    with pytest.raises(ScalarError):
        x / y
    with pytest.raises(ZeroDivisionError):
        x / 0


@settings(max_examples=60)
@given(S.scalars(), S.scalars(), S.scalars())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == ZERO
    assert p * ONE == p


@settings(max_examples=60)
@given(S.scalars(), S.scalars())
def test_quotient_recovers_factor(p, q):
    if q.is_zero():
        return
    assert (p * q).exact_quotient(q) == p


@settings(max_examples=60)
@given(S.scalars())
def test_print_parse_roundtrip(p):
    assert Scalar.parse(p.to_str(), ["x", "y", "z"]) == p
