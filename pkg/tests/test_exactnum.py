from fractions import Fraction

import pytest
from hypothesis import given

from diamondlat.exactnum import (I, J, K, ONE, ZERO, Quaternion, format_rational,
                                 parse_rational, quat_conjugate_by, quat_inv)

from conftest import nonzero_quaternions, quaternions


def test_defining_relations():
    assert I * I == J * J == K * K == -ONE
    assert I * J == K and J * K == I and K * I == J
    assert J * I == -K


def test_arith_examples():
    assert (ONE + I) + (ONE - I) == Quaternion(2)
    assert (I - J) * (I - J) == Quaternion(-2)


def test_inverse_examples():
    assert quat_inv(ONE) == ONE
    assert quat_inv(I) == -I
    assert quat_inv(I - J) == (J - I) / 2
    assert (I - J) * ((J - I) / 2) == ONE


def test_inverse_of_zero_is_an_error():
    with pytest.raises(ZeroDivisionError, match="division by zero"):
        quat_inv(ZERO)
    with pytest.raises(ZeroDivisionError):
        quat_conjugate_by(I, ZERO)


def test_conjugation_examples():
    x = Quaternion(1, 2, Fraction(-1, 3), 5)
    assert quat_conjugate_by(x, ONE) == x
    assert quat_conjugate_by(I, J) == -I
    assert quat_conjugate_by(Quaternion(Fraction(7, 2)), x) == Quaternion(Fraction(7, 2))


def test_canonical_form_is_structural():
    assert Quaternion(Fraction(2, 4)) == Quaternion(Fraction(1, 2))
    assert hash(Quaternion(Fraction(2, 4), 0, 0, 0)) == hash(Quaternion(Fraction(1, 2)))
    assert Quaternion(3) == 3


def test_json_roundtrip_and_text():
    q = Quaternion(Fraction(-1, 2), 0, 3, Fraction(5, 7))
    assert Quaternion.from_json(q.to_json()) == q
    assert Quaternion.from_json([1, "1/2", 0, -3]) == Quaternion(1, Fraction(1, 2), 0, -3)
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert format_rational(Fraction(4, 2)) == "2"
    assert str(ZERO) == "0"


@given(quaternions, quaternions, quaternions)
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z


@given(nonzero_quaternions)
def test_inverse_is_two_sided_and_involutive(x):
    inv = quat_inv(x)
    assert x * inv == ONE and inv * x == ONE
    assert quat_inv(inv) == x


@given(nonzero_quaternions, nonzero_quaternions)
def test_inverse_reverses_products(x, y):
    assert quat_inv(x * y) == quat_inv(y) * quat_inv(x)


@given(quaternions, quaternions, nonzero_quaternions)
def test_conjugation_is_an_automorphism(x, y, c):
    f = lambda v: quat_conjugate_by(v, c)  # noqa: E731
    assert f(x + y) == f(x) + f(y)
    assert f(x * y) == f(x) * f(y)
    # similar elements share norm and trace
    assert f(x).norm() == x.norm() and f(x).trace() == x.trace()


@given(quaternions)
def test_norm_is_multiplicative_with_conjugate(x):
    assert x * x.conjugate() == Quaternion(x.norm())
