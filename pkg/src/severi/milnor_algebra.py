"""The relative Milnor algebra of the versal family and the Saito matrix.

Key facts used throughout:

  * F_x, F_y have coprime leading terms x^(p-1), y^(q-1) under the block
    order, so they form a Groebner basis and normal forms land in the span
    of the Milnor staircase monomials with base-ring coefficients.
  * The Bezoutian of (F_x, F_y) decomposes as sum g_m(x,y) gdual_m(X,Y),
    producing the basis dual to the staircase under the residue pairing.
  * The Saito matrix of logarithmic vector fields along the discriminant is
    chi_ij = sigma-coordinate of F * gdual_i on g_j; it is symmetric and its
    first row is proportional to the weighted Euler field.
"""

from __future__ import annotations

from typing import Optional

from .groebner import Budget, normal_form
from .matrixops import det
from .ring import MonomialOrder, Poly, PolyError, PolyRing
from .singularities import CurveSingularity


def to_sigma(sing: CurveSingularity, h: Poly, budget: Optional[Budget] = None) -> list:
    """Coordinates of h modulo (F_x, F_y) on the Milnor staircase basis.

    Returns a list of base-ring polynomials, one per staircase monomial.
    """
    r = normal_form(h, sing.jacobian_gens(), budget)
    coords = [dict() for _ in sing.milnor_monomials]
    index = {m: k for k, m in enumerate(sing.milnor_monomials)}
    for e, c in r.terms.items():
        m = (e[0], e[1])
        k = index.get(m)
        if k is None:
            raise PolyError("normal form escaped the Milnor staircase")
        coords[k][e[2:]] = c
    return [sing.base_ring.poly(t) for t in coords]


def from_sigma(sing: CurveSingularity, coords: list) -> Poly:
    """Inverse of to_sigma on staircase representatives."""
    acc = sing.ring.zero
    X, Y = sing.ring.var("x"), sing.ring.var("y")
    for (i, j), c in zip(sing.milnor_monomials, coords):
        acc = acc + sing.lift_base(c) * X ** i * Y ** j
    return acc


def sigma_mul(sing: CurveSingularity, a: list, b: list,
              budget: Optional[Budget] = None) -> list:
    """Product in the relative Milnor algebra, in staircase coordinates."""
    return to_sigma(sing, from_sigma(sing, a) * from_sigma(sing, b), budget)


# ---------------------------------------------------------------------------
# Bezoutian and the dual basis


def _bezout_ring(sing: CurveSingularity) -> PolyRing:
    names = ("x", "y", "X", "Y") + sing.param_names
    weights = (sing.wx, sing.wy, sing.wx, sing.wy) + sing.param_weights
    order = MonomialOrder("block", weights, block=4)
    return PolyRing(names, weights, order)


def _transplant(p: Poly, target: PolyRing, slots: tuple) -> Poly:
    """Re-house p into target, sending variable i of p to variable slots[i]."""
    n = len(target.names)
    terms = {}
    for e, c in p.terms.items():
        ne = [0] * n
        for i, ei in enumerate(e):
            ne[slots[i]] += ei
        terms[tuple(ne)] = c
    return target.poly(terms)


def _diff_quotient(p: Poly, var: int, new: int) -> Poly:
    """(p - p with variable var renamed to new) / (variable var - variable new).

    Computed termwise: each x^a y^b factor with a = exp in `var` expands to
    sum_{i} x^i X^(a-1-i) times the rest of the monomial.
    """
    ring = p.ring
    terms: dict = {}
    for e, c in p.terms.items():
        a = e[var]
        if a == 0:
            continue
        base = list(e)
        base[var] = 0
        for i in range(a):
            ne = list(base)
            ne[var] += i
            ne[new] += a - 1 - i
            key = tuple(ne)
            cur = terms.get(key)
            s = c if cur is None else cur + c
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
    return Poly(ring, terms)


def dual_basis(sing: CurveSingularity, budget: Optional[Budget] = None) -> list:
    """Basis dual to the Milnor staircase under the relative residue pairing.

    Scheja-Storch: reduce the Bezoutian of (F_x, F_y) modulo the Jacobian
    ideal in both variable pairs and read off the (X, Y)-coefficients of the
    staircase monomials in (x, y).
    """
    B = _bezout_ring(sing)
    nparams = len(sing.param_names)
    # slots of (x, y, params) inside B for the two copies
    xy_slots = (0, 1) + tuple(range(4, 4 + nparams))
    XY_slots = (2, 3) + tuple(range(4, 4 + nparams))
    Fx = sing.F.partial("x")
    Fy = sing.F.partial("y")
    fx = _transplant(Fx, B, xy_slots)
    fy = _transplant(Fy, B, xy_slots)
    FX = _transplant(Fx, B, XY_slots)
    FY = _transplant(Fy, B, XY_slots)

    def rename_x_to_X(p: Poly) -> Poly:
        terms = {}
        for e, c in p.terms.items():
            ne = list(e)
            ne[2] += ne[0]
            ne[0] = 0
            key = tuple(ne)
            terms[key] = terms.get(key, B.coerce_scalar(0)) + c
        return B.poly({k: v for k, v in terms.items() if v})

    b11 = _diff_quotient(fx, 0, 2)          # (Fx(x,y) - Fx(X,y)) / (x - X)
    b12 = _diff_quotient(rename_x_to_X(fx), 1, 3)  # (Fx(X,y) - Fx(X,Y)) / (y - Y)
    b21 = _diff_quotient(fy, 0, 2)
    b22 = _diff_quotient(rename_x_to_X(fy), 1, 3)
    bez = b11 * b22 - b12 * b21

    reducers = [fx, fy, FX, FY]
    nf = normal_form(bez, reducers, budget)

    index = {m: k for k, m in enumerate(sing.milnor_monomials)}
    gduals = [dict() for _ in sing.milnor_monomials]
    for e, c in nf.terms.items():
        m = (e[0], e[1])
        k = index.get(m)
        if k is None:
            raise PolyError("Bezoutian normal form escaped the staircase")
        gduals[k][(e[2], e[3]) + e[4:]] = c
    return [sing.ring.poly(t) for t in gduals]


# ---------------------------------------------------------------------------
# Saito matrix


def saito_matrix(sing: CurveSingularity, gduals: Optional[list] = None,
                 budget: Optional[Budget] = None) -> list:
    """Symmetric matrix of the logarithmic vector fields along the discriminant.

    Row i holds the staircase coordinates of F * gdual_i; entry (i, j) is a
    base-ring polynomial of weight w_i + w_j - d.
    """
    if gduals is None:
        gduals = dual_basis(sing, budget)
    rows = [to_sigma(sing, sing.F * g, budget) for g in gduals]
    n = len(rows)
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise PolyError("Saito matrix came out asymmetric")
    return rows


def euler_coords(sing: CurveSingularity) -> list:
    """Staircase coordinates of the weighted Euler vector field, w(u_m) u_m."""
    return [sing.base_ring.var(n) * w for n, w in zip(sing.param_names, sing.param_weights)]


def discriminant(sing: CurveSingularity, chi: Optional[list] = None,
                 budget: Optional[Budget] = None) -> Poly:
    """Equation of the discriminant of the versal family: det of the Saito matrix."""
    if chi is None:
        chi = saito_matrix(sing, budget=budget)
    return det(chi)
