"""Truncated Laurent series with polynomial coefficients."""

from severi.laurent import LaurentSeries
from severi.rationals import QQ
from severi.ring import PolyRing


def ring():
    return PolyRing(("a",), (1,))


def geom(R, trunc):
    """1 - t as a series."""
    one = LaurentSeries.monomial(R, 1, 0, trunc)
    t = LaurentSeries.monomial(R, 1, 1, trunc)
    return one - t


def test_mul_and_add():
    R = ring()
    t = LaurentSeries.monomial(R, 1, -2, 10)
    s = LaurentSeries.monomial(R, QQ(3), 5, 10)
    assert (t * s).valuation == 3
    assert (t + t).coefficient(-2).constant_value() == QQ(2)


def test_invert_unit():
    R = ring()
    f = geom(R, 12)
    g = f.invert_unit()
    prod = f * g
    assert prod.coefficient(0).constant_value() == QQ(1)
    for k in range(1, 10):
        assert prod.coefficient(k).is_zero()
    # geometric series
    for k in range(0, 10):
        assert g.coefficient(k).constant_value() == QQ(1)


def test_invert_unit_with_normalization_hook():
    R = ring()
    a = R.var("a")
    one = LaurentSeries.monomial(R, 1, 0, 8)
    t = LaurentSeries.monomial(R, 1, 1, 8).scalar_mul(a)
    f = one - t

    def cap(p):  # drop coefficient monomials of weight > 2
        return R.poly({e: c for e, c in p.terms.items() if e[0] <= 2})

    g = f.invert_unit(normalize=cap)
    assert g.coefficient(2) == a * a
    assert g.coefficient(3).is_zero()  # a^3 was capped away


def test_derivative_and_integral():
    R = ring()
    t3 = LaurentSeries.monomial(R, QQ(5), 3, 10)
    assert t3.derivative().coefficient(2).constant_value() == QQ(15)
    back = t3.derivative().formal_integral()
    assert back.coefficient(3).constant_value() == QQ(5)


def test_residue():
    R = ring()
    s = LaurentSeries.monomial(R, QQ(7), -1, 5) + LaurentSeries.monomial(R, 1, 2, 5)
    assert s.residue().constant_value() == QQ(7)
    assert s.derivative().residue().is_zero()  # residues of derivatives vanish


def test_shift_and_truncate():
    R = ring()
    s = LaurentSeries.monomial(R, 1, 0, 6)
    assert s.shift(-4).valuation == -4
    assert s.truncate(3).trunc == 3
