import pytest

from severi.periods import (InfinityChart, choose_truncation, omega_matrix,
                            pullback_form, weight_cap)
from severi.matrixops import det, is_skew
from severi.milnor_algebra import saito_matrix
from severi.published import omega_matrix as published_omega
from severi.ring import QQ
from severi.singularities import singularity


def test_weight_cap_values():
    assert weight_cap(singularity("A2")) == 2
    assert weight_cap(singularity("A4")) == 6
    assert weight_cap(singularity("E6")) == 10


def test_a2_period_matrix_is_standard_symplectic():
    s = singularity("A2")
    W = omega_matrix(s)
    one = s.base_ring.one
    assert W[0][1] == one and W[1][0] == -one
    assert W[0][0].is_zero() and W[1][1].is_zero()


@pytest.mark.parametrize("label", ["A2", "A4", "E6"])
def test_period_matrix_skew_with_constant_determinant(label):
    s = singularity(label)
    W = omega_matrix(s)
    assert is_skew(W)
    dW = det(W)
    assert dW.is_constant() and not dW.is_zero()


def test_a4_matches_published_period_matrix():
    s = singularity("A4")
    assert omega_matrix(s) == published_omega(s)


def test_a6_proportional_to_published_period_matrix():
    s = singularity("A6")
    from severi.reports import _scalar_vs
    lam = _scalar_vs(omega_matrix(s), published_omega(s))
    assert lam is not None and not lam == 0


@pytest.mark.parametrize("label", ["A2", "A4"])
def test_truncation_stability(label):
    s = singularity(label)
    W = omega_matrix(s)
    assert omega_matrix(s, 2 * choose_truncation(s)) == W


def test_basis_form_residues_vanish():
    s = singularity("A4")
    chart = InfinityChart(s)
    zero = (0,) * len(s.param_names)
    for m in s.milnor_monomials:
        g = s.ring.poly({m + zero: QQ(1)})
        assert pullback_form(chart, g).residue().is_zero()


def test_entry_weights():
    s = singularity("A4")
    W = omega_matrix(s)
    s2 = 2 * (s.p + s.q)
    for i in range(s.mu):
        for j in range(s.mu):
            if not W[i][j].is_zero():
                wts = W[i][j].weights_of_terms()
                assert wts == {s2 - s.param_weights[i] - s.param_weights[j]}


def test_gram_matrix_against_saito_pfaffian():
    from severi.strata import pfaffian, skew_gram
    s = singularity("A4")
    chi = saito_matrix(s)
    W = omega_matrix(s)
    M = skew_gram(s, chi, W)
    assert pfaffian(M) == pfaffian(W) * det(chi)
