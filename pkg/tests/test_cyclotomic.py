"""Exact arithmetic in cyclotomic fields Q[z]/Phi_m."""

import pytest

from severi.cyclotomic import CycloField, cyclotomic_polynomial, root_of_minus_one
from severi.rationals import QQ


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)


def test_generator_has_exact_order():
    F = CycloField(8)
    z = F.generator()
    assert z ** 8 == F.scalar(1)
    assert z ** 4 != F.scalar(1)
    assert z ** 4 == F.scalar(-1)


def test_field_inverse():
    F = CycloField(5)
    z = F.generator()
    a = z ** 2 + F.scalar(3)
    assert a * a.inverse() == F.scalar(1)
    assert (F.scalar(1) / a) * a == F.scalar(1)


def test_zero_has_no_inverse():
    F = CycloField(3)
    with pytest.raises(ZeroDivisionError):
        F.scalar(0).inverse()


def test_root_of_minus_one():
    for q in (2, 3, 4, 5, 7):
        z = root_of_minus_one(q)
        assert z ** q == z.field.scalar(-1)


def test_rational_detection():
    F = CycloField(6)
    z = F.generator()
    a = z + F.scalar(1) - z
    assert a.is_rational()
    assert a.rational_value() == QQ(1)
    assert not z.is_rational()


def test_pow_matches_repeated_multiplication():
    F = CycloField(7)
    z = F.generator()
    acc = F.scalar(1)
    for n in range(12):
        assert z ** n == acc
        acc = acc * z
