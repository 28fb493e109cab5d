"""Milnor algebra coordinates, the dual basis and the Saito matrix."""

import pytest

from severi.matrixops import det, is_symmetric
from severi.milnor_algebra import (discriminant, dual_basis, euler_coords,
                                   from_sigma, saito_matrix, to_sigma)
from severi.rationals import QQ
from severi.ring import wdeg
from severi.singularities import singularity


def staircase_monomial(s, m):
    zero = (0,) * len(s.param_names)
    return s.ring.poly({m + zero: QQ(1)})


@pytest.mark.parametrize("label", ["A2", "A4", "E6"])
def test_dual_basis_pairing(label):
    """The socle coordinate of g_i * gdual_j is d * delta_ij."""
    s = singularity(label)
    gduals = dual_basis(s)
    for i, m in enumerate(s.milnor_monomials):
        g = staircase_monomial(s, m)
        for j, gd in enumerate(gduals):
            socle = to_sigma(s, g * gd)[0]
            if i == j:
                assert socle == s.base_ring.one * s.d
            else:
                assert socle.is_zero()


def test_to_sigma_round_trip():
    s = singularity("A4")
    coords = [s.base_ring.var("a"), s.base_ring.one, s.base_ring.zero,
              s.base_ring.var("d") * 2]
    assert to_sigma(s, from_sigma(s, coords)) == coords


def test_to_sigma_of_jacobian_element_vanishes():
    s = singularity("A4")
    fx = s.F.partial("x")
    assert all(c.is_zero() for c in to_sigma(s, fx * s.ring.var("y")))


@pytest.mark.parametrize("label", ["A2", "A4", "A6", "E6"])
def test_saito_matrix_symmetric_with_euler_row(label):
    s = singularity(label)
    chi = saito_matrix(s)
    assert is_symmetric(chi)
    # first row is the weighted Euler field, by the Euler identity for F
    assert chi[0] == euler_coords(s)


@pytest.mark.parametrize("label", ["A2", "A4"])
def test_saito_entry_weights(label):
    s = singularity(label)
    chi = saito_matrix(s)
    shift = s.d - 2 * (s.p + s.q)
    for i, row in enumerate(chi):
        for j, p in enumerate(row):
            if not p.is_zero():
                assert wdeg(p) == s.param_weights[i] + s.param_weights[j] + shift


def test_discriminant_a2():
    s = singularity("A2")
    disc = discriminant(s)
    ref = s.base_ring.parse("a^3+27/4*b^2")
    # proportional to the cusp discriminant
    e, c = next(iter(ref.sorted_terms()))
    lam = disc.terms.get(e) / c
    assert disc == ref * lam


def test_determinant_weight():
    s = singularity("A4")
    disc = discriminant(s)
    # det chi is weighted homogeneous of weight sum(2 w_i) + mu*(d - 2(p+q))
    expected = sum(2 * w for w in s.param_weights) + s.mu * (s.d - 2 * (s.p + s.q))
    assert wdeg(disc) == expected
