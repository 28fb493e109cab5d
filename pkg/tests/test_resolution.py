"""Syzygies, minimal free resolutions, Betti numbers, Cohen-Macaulayness."""

import pytest

from severi.groebner import Ideal
from severi.resolution import (is_cohen_macaulay, minimal_ideal_gens,
                               minimal_module_gens, minimal_resolution,
                               syzygies)
from severi.ring import PolyRing


def R3():
    return PolyRing(("x", "y", "z"), (1, 1, 1))


def test_koszul_resolution_of_the_point():
    R = R3()
    gens = [R.var("x"), R.var("y"), R.var("z")]
    res = minimal_resolution(gens)
    assert res.betti == (3, 3, 1)
    assert res.check_complex()
    assert res.is_minimal()


def test_twisted_cubic():
    R = R3()
    x, y, z = R.var("x"), R.var("y"), R.var("z")
    # generic determinantal: 2x2 minors of [[x,y],[y,z]]
    gens = [x * z - y ** 2]
    res = minimal_resolution(gens)
    assert res.betti == (1,)


def test_minimal_ideal_gens_drops_redundant():
    R = R3()
    x, y = R.var("x"), R.var("y")
    kept = minimal_ideal_gens([x, y, x + y, x * y])
    assert len(kept) == 2


def test_syzygies_annihilate_generators():
    R = R3()
    x, y, z = R.var("x"), R.var("y"), R.var("z")
    vectors = [[x], [y], [z]]
    syz = syzygies(vectors)
    assert syz  # Koszul relations exist
    for rel in syz:
        acc = R.zero
        for coeff, (gen,) in zip(rel, vectors):
            acc = acc + coeff * gen
        assert acc.is_zero()


def test_minimal_module_gens_graded():
    R = R3()
    x, y = R.var("x"), R.var("y")
    vectors = [[x, R.zero], [y, R.zero], [x + y, R.zero], [x * x, R.zero]]
    kept = minimal_module_gens(vectors, R, [0, 0])
    assert len(kept) == 2


def test_cohen_macaulay_complete_intersection():
    R = R3()
    x, y, z = R.var("x"), R.var("y"), R.var("z")
    info = is_cohen_macaulay(Ideal(R, [x ** 2 - y * z, y ** 3]))
    assert info["codim"] == 2
    assert info["pd"] == 2
    assert info["cohen_macaulay"]
    assert info["betti"] == (2, 1)


def test_non_cohen_macaulay_example():
    # two skew lines in P^3: codim 2, pd 3
    R = PolyRing(("x", "y", "z", "w"), (1, 1, 1, 1))
    x, y, z, w = (R.var(n) for n in "xyzw")
    info = is_cohen_macaulay(Ideal(R, [x * z, x * w, y * z, y * w]))
    assert info["codim"] == 2
    assert info["pd"] == 3
    assert not info["cohen_macaulay"]


def test_resolution_requires_homogeneous_input():
    R = R3()
    x, y = R.var("x"), R.var("y")
    from severi.ring import PolyError
    with pytest.raises(PolyError):
        minimal_resolution([x ** 2 + y])
