import pytest

from severi.groebner import Budget, Ideal
from severi.matrixops import det
from severi.milnor_algebra import saito_matrix
from severi.periods import omega_matrix
from severi.ring import PolyError, PolyRing, QQ
from severi.singularities import singularity
from severi.strata import (PoissonStructure, is_closed_form, is_poisson_closed,
                           lie_closure_check, nodal_parameters, pfaffian,
                           poisson_bracket, presentations, rank_at, severi_ideal,
                           skew_gram)


def _setup(label):
    s = singularity(label)
    chi = saito_matrix(s)
    W = omega_matrix(s)
    return s, chi, W, skew_gram(s, chi, W)


def test_pfaffian_2x2_and_4x4():
    R = PolyRing(("p", "q", "r", "s", "t", "u"), (1,) * 6)
    p, q, r, s, t, u = (R.var(n) for n in R.names)
    z = R.zero
    assert pfaffian([[z, p], [-p, z]]) == p
    A = [[z, p, q, r],
         [-p, z, s, t],
         [-q, -s, z, u],
         [-r, -t, -u, z]]
    assert pfaffian(A) == p * u - q * t + r * s


def test_pfaffian_squares_to_determinant():
    s, chi, W, M = _setup("A4")
    pf = pfaffian(M)
    assert pf * pf == det(M)
    assert pf == pfaffian(W) * det(chi)


def test_a2_stratum_is_discriminant():
    s, chi, W, M = _setup("A2")
    I = severi_ideal(s, M, 1)
    assert I.codimension() == 1
    a, b = s.base_ring.var("a"), s.base_ring.var("b")
    disc = Ideal(s.base_ring, [a ** 3 + QQ(27, 4) * b * b])
    from severi.groebner import ideal_equal
    assert ideal_equal(I, disc)


def test_a4_stratum_codimensions():
    s, chi, W, M = _setup("A4")
    for k in (1, 2):
        assert severi_ideal(s, M, k).codimension() == k


def test_rank_at_reference_points():
    s, chi, W, M = _setup("A4")
    for pt, r in [((-3, 2, 0, 0), 0), ((-3, 3, -2, 1), 2), ((1, 1, 1, 1), 4)]:
        d = dict(zip(s.param_names, [QQ(v) for v in pt]))
        assert rank_at(M, d) == r


def test_nodal_parameters_a_series():
    s, chi, W, M = _setup("A4")
    pt, m = nodal_parameters(s, [1, -1])
    assert m == 2
    assert rank_at(M, pt) == 2 * (s.delta - m)
    I = severi_ideal(s, M, 2)
    for g in I.generators:
        assert g.evaluate(pt).is_zero()
    pt1, m1 = nodal_parameters(s, [2], cofactor=[1, 1, 4, 1])
    assert m1 == 1
    assert rank_at(M, pt1) == 2 * (s.delta - 1)


def test_nodal_parameters_rejects_degenerate_input():
    s = singularity("A4")
    with pytest.raises(PolyError):
        nodal_parameters(s, [1, 1])  # repeated position
    with pytest.raises(PolyError):
        nodal_parameters(s, [1, 2, 3])  # too many nodes for p = 5
    with pytest.raises(PolyError):
        nodal_parameters(s, [2], cofactor=[0, 0, 4, 1])  # not squarefree


def test_nodal_parameters_e_series():
    s, chi, W, M = _setup("E6")
    pt, m = nodal_parameters(s, (1, 1))
    assert m == 1
    assert pt["d"] == QQ(-3) and pt["e"] == QQ(-4) and pt["f"] == QQ(5)
    assert pt["a"] == 0 and pt["b"] == 0 and pt["c"] == 0
    assert rank_at(M, pt) == 2 * (s.delta - 1)
    with pytest.raises(PolyError):
        nodal_parameters(s, (0, 1))


def test_a4_coordinate_brackets():
    s = singularity("A4")
    ps = PoissonStructure(s, omega_matrix(s))
    b = s.base_ring
    one, third = b.one, b.one * QQ(1, 3)
    assert ps.coordinate_bracket(0, 3) == one          # {a, d}
    assert ps.coordinate_bracket(1, 2) == third        # {b, c}
    assert ps.coordinate_bracket(0, 1).is_zero()       # {a, b}
    assert ps.coordinate_bracket(2, 3) == b.var("a") * QQ(1, 3)  # {c, d}
    assert ps.jacobi_on_coordinates()
    assert poisson_bracket(ps, b.var("a"), b.var("d")) == one


def test_bracket_antisymmetry_and_leibniz():
    s = singularity("A4")
    ps = PoissonStructure(s, omega_matrix(s))
    b = s.base_ring
    f = b.var("a") * b.var("b") + b.var("c")
    g = b.var("d") ** 2 - b.var("a")
    h = b.var("b") + QQ(1)
    assert ps.bracket(f, g) == -ps.bracket(g, f)
    assert ps.bracket(f, g * h) == ps.bracket(f, g) * h + g * ps.bracket(f, h)


def test_period_form_is_closed():
    s = singularity("A4")
    assert is_closed_form(s, omega_matrix(s))


def test_strata_poisson_closed_with_negative_control():
    s, chi, W, M = _setup("A4")
    ps = PoissonStructure(s, W)
    for k in (1, 2):
        assert is_poisson_closed(ps, severi_ideal(s, M, k), Budget(60))
    b = s.base_ring
    bad = Ideal(b, [b.var("a"), b.var("d")])  # {a, d} = 1 is not in (a, d)
    assert not is_poisson_closed(ps, bad, Budget(60))


def test_presentations_shapes():
    s, chi, W, M = _setup("A4")
    pres = presentations(chi, M)
    assert len(pres["intersection_module"]) == s.mu
    ext1 = pres["ext1"]
    assert len(ext1) == s.mu - 1 and all(len(r) == s.mu - 1 for r in ext1)
    assert ext1[0][0] == chi[0][0]


@pytest.mark.parametrize("label", ["A2", "A4"])
def test_lie_closure_of_gram_columns(label):
    s, chi, W, M = _setup(label)
    assert lie_closure_check(s, M, Budget(120))


def test_lie_closure_negative_control():
    s = singularity("A2")
    b = s.base_ring
    a = b.var("a")
    # columns (a, 0) and (0, 1): bracket is (0, 0) trivially in the module,
    # so build a genuinely non-closed pair instead.
    M = [[a * a, b.one], [b.zero, a]]
    assert not lie_closure_check(s, M, Budget(60))
