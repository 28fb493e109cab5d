"""Catalog entries, gradings and versal deformations."""

import pytest

from severi.ring import PolyError, wdeg
from severi.singularities import CATALOG, CurveSingularity, custom, singularity


def test_catalog_invariants():
    expected = {
        "A2": (2, 1), "A4": (4, 2), "A6": (6, 3), "A8": (8, 4),
        "E6": (6, 3), "E8": (8, 4),
    }
    for label, (mu, delta) in expected.items():
        s = singularity(label)
        inv = s.invariants()
        assert inv["mu"] == mu
        assert inv["delta"] == delta
        assert inv["r"] == 1        # irreducible: one branch
        assert inv["genus"] == delta


def test_weights_and_degree():
    s = singularity("E6")  # x^3 + y^4
    assert (s.wx, s.wy) == (4, 3)
    assert s.d == 12
    assert wdeg(s.f) == 12


def test_versal_deformation_is_weighted_homogeneous():
    for label in CATALOG:
        s = singularity(label)
        assert wdeg(s.F) == s.d
        assert len(s.param_names) == s.mu
        # parameter weights strictly decrease nowhere (sorted ascending)
        assert list(s.param_weights) == sorted(s.param_weights)


def test_milnor_basis_matches_staircase():
    s = singularity("A4")
    basis = s.milnor_basis()
    assert len(basis) == s.mu
    assert basis[0].leading_monomial() == (s.p - 2, s.q - 2)  # socle first


def test_versal_exposed():
    s = singularity("A2")
    assert s.versal() == s.F


def test_custom_requires_coprime_exponents():
    with pytest.raises(PolyError):
        custom(4, 2)
    with pytest.raises(PolyError):
        CurveSingularity(1, 5)
    with pytest.raises(PolyError):
        custom(3, 7)  # parameter of weight -1: not positively graded
    s = custom(11, 2)
    assert s.mu == 10
    assert min(s.param_weights) > 0


def test_unknown_label():
    with pytest.raises(PolyError):
        singularity("D5")


def test_base_poly_round_trip():
    s = singularity("A2")
    a = s.ring.var("a")
    p = a ** 2 + 3 * a
    assert s.lift_base(s.base_poly(p)) == p
    with pytest.raises(PolyError):
        s.base_poly(s.ring.var("x"))
