"""Symplectic period matrix via residues at infinity.

The smooth fiber of the versal family is parametrized near infinity by
x(t) = t^(-q) and a Laurent series y(t) with leading term zeta * t^(-p),
zeta^q = -1, solved by Newton iteration from F(x(t), y(t), u) = 0.  The
intersection pairing of the vanishing cohomology classes is computed as

    W_ij = Res_t ( integral(a_i) * a_j ),   a_m = g_m(x(t), y(t)) x'(t) / F_y,

with g_m the Milnor staircase monomials.  Everything in sight is weighted
homogeneous when t is given weight -1, so deformation-parameter monomials
above the maximal entry weight 2(d - w_x - w_y) can be discarded exactly;
that cap is what keeps the series coefficients small.
"""

from __future__ import annotations

from typing import Optional

from .cyclotomic import CycloField, root_of_minus_one
from .groebner import Budget
from .laurent import LaurentError, LaurentSeries
from .ring import Poly, PolyError, PolyRing
from .singularities import CurveSingularity


def choose_truncation(sing: CurveSingularity) -> int:
    """t-adic working precision: generous, cost is bounded by the weight cap."""
    return 4 * sing.d * sing.mu


def weight_cap(sing: CurveSingularity) -> int:
    """Largest parameter weight of any period-matrix entry."""
    return 2 * (sing.d - sing.wx - sing.wy)


class InfinityChart:
    """Parametrization of the versal curve near infinity over a cyclotomic field."""

    def __init__(self, sing: CurveSingularity, trunc: Optional[int] = None,
                 budget: Optional[Budget] = None):
        self.sing = sing
        self.trunc = choose_truncation(sing) if trunc is None else trunc
        self.cap = weight_cap(sing)
        self.budget = budget
        self.zeta = root_of_minus_one(sing.q)
        self.field = self.zeta.field
        self.coeff_ring = PolyRing(sing.param_names, sing.param_weights, scalars=self.field)
        self.x = LaurentSeries.monomial(self.coeff_ring, 1, -sing.q, self.trunc)
        self.y = self._solve_y()

    # -- weight-capped arithmetic -----------------------------------------
    def _cap_poly(self, p: Poly) -> Poly:
        ring = p.ring
        mw = ring.monomial_weight
        terms = {e: c for e, c in p.terms.items() if mw(e) <= self.cap}
        if len(terms) == len(p.terms):
            return p
        return Poly(ring, terms)

    def _cap_series(self, s: LaurentSeries) -> LaurentSeries:
        return s.map_coeffs(self._cap_poly)

    def invert(self, s: LaurentSeries) -> LaurentSeries:
        return s.invert_unit(normalize=self._cap_poly)

    # -- evaluation of polynomials on the parametrization -------------------
    def evaluate(self, p: Poly, y: Optional[LaurentSeries] = None) -> LaurentSeries:
        """Series of p(x(t), y(t), u) for p in the total ring of the singularity."""
        if y is None:
            y = self.y
        q = self.sing.q
        ypows = [LaurentSeries.monomial(self.coeff_ring, 1, 0, self.trunc)]
        maxy = max((e[1] for e in p.terms), default=0)
        for _ in range(maxy):
            ypows.append(self._cap_series(ypows[-1] * y))
        acc = LaurentSeries.zero(self.coeff_ring, self.trunc)
        for e, c in p.sorted_terms():
            if self.budget is not None:
                self.budget.check()
            coeff = self.coeff_ring.poly({e[2:]: self.field.scalar(c)})
            term = ypows[e[1]].scalar_mul(coeff).shift(-q * e[0])
            acc = acc + term
        return self._cap_series(acc)

    # -- Newton solution for y(t) ------------------------------------------
    def _solve_y(self) -> LaurentSeries:
        sing = self.sing
        y = LaurentSeries.monomial(self.coeff_ring, self.zeta, -sing.p, self.trunc)
        F = sing.F
        Fy = F.partial("y")
        for _ in range(64):
            if self.budget is not None:
                self.budget.check()
            residual = self.evaluate(F, y)
            if residual.is_zero():
                return y
            correction = self._cap_series(residual * self.invert(self.evaluate(Fy, y)))
            y = self._cap_series((y - correction).truncate(self.trunc))
        raise LaurentError("Newton iteration for y(t) did not terminate")


def pullback_form(chart: InfinityChart, g: Poly) -> LaurentSeries:
    """Series of the 1-form g dx / F_y on the parametrized curve."""
    sing = chart.sing
    xprime = LaurentSeries.monomial(chart.coeff_ring, -sing.q, -sing.q - 1, chart.trunc)
    fy_inv = chart.invert(chart.evaluate(sing.F.partial("y")))
    return chart._cap_series(chart.evaluate(g) * xprime * fy_inv)


def _residue_of_product(a: LaurentSeries, b: LaurentSeries) -> Poly:
    """Coefficient of 1/t in a*b, without building the whole product."""
    lo = max(a.valuation, -1 - (b.valuation + len(b.coeffs) - 1))
    hi = min(a.valuation + len(a.coeffs) - 1, -1 - b.valuation)
    if hi > a.trunc or -1 - lo > b.trunc:
        raise LaurentError("insufficient precision for residue of product")
    acc = a.ring.zero
    for k in range(lo, hi + 1):
        ca = a.coefficient(k)
        if ca.is_zero():
            continue
        cb = b.coefficient(-1 - k)
        if not cb.is_zero():
            acc = acc + ca * cb
    return acc


def omega_matrix(sing: CurveSingularity, trunc: Optional[int] = None,
                 budget: Optional[Budget] = None) -> list:
    """Coordinate matrix of the symplectic form, normalized to rational entries.

    Skew-symmetric mu x mu matrix over the parameter ring; the overall
    cyclotomic period scalar is divided out so that the first nonzero entry
    (row-major) is monic.
    """
    chart = InfinityChart(sing, trunc, budget)
    X, Y = sing.ring.var("x"), sing.ring.var("y")
    fy_inv = chart.invert(chart.evaluate(sing.F.partial("y")))
    xprime = LaurentSeries.monomial(chart.coeff_ring, -sing.q, -sing.q - 1, chart.trunc)
    forms = []
    for i, j in sing.milnor_monomials:
        if budget is not None:
            budget.check()
        g = X ** i * Y ** j
        forms.append(chart._cap_series(chart.evaluate(g) * xprime * fy_inv))
    integrals = [f.formal_integral() for f in forms]
    mu = sing.mu
    raw = [[chart.coeff_ring.zero] * mu for _ in range(mu)]
    for i in range(mu):
        for j in range(mu):
            if budget is not None:
                budget.check()
            raw[i][j] = chart._cap_poly(_residue_of_product(integrals[i], forms[j]))
    for i in range(mu):
        for j in range(i, mu):
            if not (raw[i][j] + raw[j][i]).is_zero():
                raise PolyError("period matrix came out non-skew")
    return _rationalize(sing, raw)


def _rationalize(sing: CurveSingularity, raw: list) -> list:
    """Divide out the common cyclotomic scalar; entries must become rational."""
    lam = None
    for row in raw:
        for entry in row:
            if not entry.is_zero():
                lam = entry.leading_coeff()
                break
        if lam is not None:
            break
    if lam is None:
        raise PolyError("period matrix is zero")
    base = sing.base_ring
    out = []
    for row in raw:
        new_row = []
        for entry in row:
            terms = {}
            for e, c in entry.terms.items():
                val = c / lam
                if not val.is_rational():
                    raise PolyError("period matrix entries are not a common scalar "
                                    "multiple of rational polynomials")
                terms[e] = val.rational_value()
            new_row.append(base.poly(terms))
        out.append(new_row)
    return out
