"""Buchberger, normal forms, ideal predicates, dimension and degree."""

import pytest

from severi.groebner import (Budget, BudgetExceeded, Ideal, groebner_basis,
                             ideal_equal, normal_form)
from severi.rationals import QQ
from severi.ring import PolyRing


def R3():
    return PolyRing(("x", "y", "z"), (1, 1, 1))


def test_normal_form_in_principal_ideal():
    R = R3()
    x, y = R.var("x"), R.var("y")
    f = x ** 2 * y + x
    assert normal_form(f * (x + y), [f]).is_zero()
    assert not normal_form(f + R.one, [f]).is_zero()


def test_groebner_basis_membership():
    R = R3()
    x, y, z = R.var("x"), R.var("y"), R.var("z")
    I = Ideal(R, [x * y - z, y * z - x])
    # (xy - z) * y + (yz - x) = xy^2 - x
    assert I.contains(x * y ** 2 - x)
    assert not I.contains(x)


def test_reduced_basis_is_canonical():
    R = R3()
    x, y, z = R.var("x"), R.var("y"), R.var("z")
    g1 = groebner_basis([x + y, y + z])
    g2 = groebner_basis([x - z + 2 * (y + z), y + z, x + y])
    assert g1 == g2


def test_ideal_equality():
    R = R3()
    x, y = R.var("x"), R.var("y")
    assert ideal_equal(Ideal(R, [x, y]), Ideal(R, [x + y, y]))
    assert not ideal_equal(Ideal(R, [x]), Ideal(R, [x, y]))


def test_dimension_and_degree():
    R = R3()
    x, y, z = R.var("x"), R.var("y"), R.var("z")
    pt = Ideal(R, [x, y, z])
    assert pt.dimension() == 0
    assert pt.codimension() == 3
    quadric = Ideal(R, [x * y - z ** 2])
    assert quadric.codimension() == 1
    assert quadric.degree() == 2


def test_unit_ideal():
    R = R3()
    x = R.var("x")
    assert Ideal(R, [x, x + R.one]).is_unit()
    assert not Ideal(R, [x]).is_unit()


def test_budget_exceeded_raises():
    R = R3()
    x, y, z = R.var("x"), R.var("y"), R.var("z")
    b = Budget(0.0)
    with pytest.raises(BudgetExceeded):
        groebner_basis([x ** 5 - y * z + x, y ** 4 - z * x, z ** 3 - x * y], b)


def test_weighted_order_groebner():
    R = PolyRing(("a", "b"), (4, 6))
    a, b = R.var("a"), R.var("b")
    I = Ideal(R, [a ** 3 + QQ(27, 4) * b ** 2])
    assert I.codimension() == 1
    assert I.contains((a ** 3 + QQ(27, 4) * b ** 2) * (a + b))
