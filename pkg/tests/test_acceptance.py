"""End-to-end acceptance checks against published invariants.

Each test is standalone and uses exact arithmetic; comparisons allow only
the stated global-scalar freedoms.  The E-series and stretch checks treat
budget exhaustion as a distinctly reported soft failure, not an error.
"""

import os
import random
import time

import pytest

from severi import published
from severi.groebner import Budget, BudgetExceeded, Ideal, ideal_equal, multiplicity
from severi.milnor_algebra import saito_matrix
from severi.matrixops import det
from severi.periods import omega_matrix
from severi.reports import RunConfig, run, serialize, verify_paper, _scalar_vs
from severi.ring import PolyError, QQ
from severi.singularities import singularity
from severi.strata import nodal_parameters, rank_at, severi_ideal, skew_gram

STRETCH = os.environ.get("SEVERI_STRETCH") == "1"


def _statuses(rows):
    return {r["status"] for r in rows}, [r for r in rows if r["status"] != "pass"]


def _soft(rows):
    """Hard-fail on any 'fail' row; budget rows xfail the test distinctly."""
    kinds, bad = _statuses(rows)
    assert "fail" not in kinds, bad
    if "budget" in kinds:
        pytest.xfail("budget exceeded: " + "; ".join(r["check"] for r in bad))


def test_criterion1_a2_end_to_end():
    t0 = time.monotonic()
    s = singularity("A2")
    chi = saito_matrix(s)
    b = s.base_ring
    a, bb = b.var("a"), b.var("b")
    ref = [[4 * a, 6 * bb], [6 * bb, a * a * QQ(-4, 3)]]
    assert _scalar_vs(chi, ref) is not None
    disc = a ** 3 * 4 + bb * bb * 27
    assert _scalar_vs([[det(chi)]], [[disc]]) is not None
    W = omega_matrix(s)
    assert W[0][1] == b.one and W[1][0] == -b.one
    M = skew_gram(s, chi, W)
    assert ideal_equal(severi_ideal(s, M, 1), Ideal(b, [disc]))
    assert time.monotonic() - t0 < 5


def test_criterion2_a4_golden():
    t0 = time.monotonic()
    rows = verify_paper("A4")
    kinds, bad = _statuses(rows)
    assert kinds == {"pass"}, bad
    s = singularity("A4")
    M = skew_gram(s, saito_matrix(s), omega_matrix(s))
    for pt, r in [((-3, 2, 0, 0), 0), ((-3, 3, -2, 1), 2), ((1, 1, 1, 1), 4)]:
        assert rank_at(M, dict(zip(s.param_names, map(QQ, pt)))) == r
    assert time.monotonic() - t0 < 120


@pytest.mark.slow
def test_criterion3_a6_golden():
    t0 = time.monotonic()
    rows = verify_paper("A6")
    kinds, bad = _statuses(rows)
    assert kinds == {"pass"}, bad
    assert time.monotonic() - t0 < 900


@pytest.mark.slow
def test_criterion4_e6_golden():
    _soft(verify_paper("E6", 1800))


@pytest.mark.stretch
@pytest.mark.skipif(not STRETCH, reason="stretch criterion; set SEVERI_STRETCH=1")
def test_criterion5_a8_stretch_betti():
    s = singularity("A8")
    M = skew_gram(s, saito_matrix(s), omega_matrix(s))
    budget = Budget(3600)
    from severi.resolution import is_cohen_macaulay
    for k, rows in published.BETTI["A8"].items():
        try:
            info = is_cohen_macaulay(severi_ideal(s, M, k), budget)
        except BudgetExceeded as exc:
            pytest.xfail(f"budget exceeded at stratum {k}: {exc.stage}")
        assert info["betti"] == rows


def test_criterion6_e8_stretch_degree():
    s = singularity("E8")
    M = skew_gram(s, saito_matrix(s), omega_matrix(s))
    try:
        deg = multiplicity(severi_ideal(s, M, s.delta), Budget(3600))
    except BudgetExceeded as exc:
        pytest.xfail(f"budget exceeded: {exc.stage}")
    assert deg == published.DEGREE_DELTA_CONST["E8"]


@pytest.mark.parametrize("label", ["A2", "A4"])
def test_criterion7_property_suite(label):
    report = run(RunConfig(label=label, no_cache=True))
    props = report["properties"]
    assert props and all(props.values()), props


def test_criterion7_determinism():
    cfg = dict(label="A4", strata=[1, 2], betti=True, poisson=True,
               rank_tests=True, presentations=True, no_cache=True)
    out1 = serialize(run(RunConfig(**cfg)), "json")
    out2 = serialize(run(RunConfig(**cfg)), "json")
    assert out1 == out2


def _random_nodal(s, rng):
    delta = s.delta
    for _ in range(200):
        m = rng.randint(1, delta)
        pos = rng.sample(range(-12, 13), m)
        n = s.p - 2 * m
        try:
            if n == 0:
                pos[-1] = -(sum(pos) - pos[-1])
                if len(set(pos)) != m:
                    continue
                return nodal_parameters(s, pos)
            cof = [QQ(rng.randint(-9, 9)) for _ in range(n + 1)]
            cof[n] = QQ(1)
            cof[n - 1] = 2 * sum((QQ(x) for x in pos), QQ(0))
            return nodal_parameters(s, pos, cofactor=cof)
        except PolyError:
            continue
    raise AssertionError("could not construct a nodal parameter point")


@pytest.mark.parametrize("label", ["A2", "A4", "A6", "A8"])
def test_criterion8_rank_theorem_random_points(label):
    s = singularity(label)
    M = skew_gram(s, saito_matrix(s), omega_matrix(s))
    rng = random.Random(20260826)
    for _ in range(10):
        point, m = _random_nodal(s, rng)
        assert rank_at(M, point) == 2 * (s.delta - m)
