"""Severi strata: Pfaffian ideals of the skew Gram matrix, rank tests,
nodal test points, and the Poisson structure of the symplectic form.

The stratum D(k) of parameter values whose fiber has delta invariant >= k
is cut out by the principal Pfaffians of size 2(delta - k + 1) of
M = chi W chi^t, where chi is the Saito matrix and W the coordinate matrix
of the symplectic form.
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional

from .groebner import Budget, Ideal
from .matrixops import adjugate, det, mat_mul, scalar_rank, transpose
from .rationals import QQ, rat
from .resolution import SchreyerOrder, mod_buchberger, mod_member
from .ring import Poly, PolyError
from .singularities import CurveSingularity


def skew_gram(sing: CurveSingularity, chi: list, W: list) -> list:
    """M = chi W chi^t; chi is symmetric, so M_ij is Omega(chi_i, chi_j)."""
    if len(chi) != len(W):
        raise PolyError("incompatible matrix sizes")
    M = mat_mul(mat_mul(chi, W), transpose(chi))
    n = len(M)
    for i in range(n):
        for j in range(i, n):
            if not (M[i][j] + M[j][i]).is_zero():
                raise PolyError("Gram matrix came out non-skew")
    return M


def pfaffian(A: list, rows: Optional[tuple] = None) -> Poly:
    """Pfaffian of an even-size exactly skew matrix, by first-row expansion."""
    n = len(A)
    ring = A[0][0].ring
    if rows is None:
        if n % 2:
            raise PolyError("Pfaffian needs even size")
        for i in range(n):
            for j in range(i, n):
                if not (A[i][j] + A[j][i]).is_zero():
                    raise PolyError("Pfaffian of a non-skew matrix")
        rows = tuple(range(n))
    if len(rows) % 2:
        raise PolyError("Pfaffian needs even size")
    cache: dict = {}

    def pf(active: tuple) -> Poly:
        if not active:
            return ring.one
        hit = cache.get(active)
        if hit is not None:
            return hit
        i0 = active[0]
        rest = active[1:]
        acc = ring.zero
        for m, j in enumerate(rest):
            entry = A[i0][j]
            if not entry.is_zero():
                sub = tuple(r for r in rest if r != j)
                term = entry * pf(sub)
                acc = acc + term if m % 2 == 0 else acc - term
        cache[active] = acc
        return acc

    return pf(tuple(rows))


def severi_ideal(sing: CurveSingularity, M: list, k: int) -> Ideal:
    """Ideal of D(k): principal Pfaffians of size 2(delta - k + 1) of M."""
    if not 1 <= k <= sing.delta:
        raise PolyError(f"stratum index k={k} out of range 1..{sing.delta}")
    size = 2 * (sing.delta - k + 1)
    gens = []
    seen = set()
    for rows in combinations(range(sing.mu), size):
        p = pfaffian(M, rows)
        if p.is_zero() or p in seen:
            continue
        seen.add(p)
        gens.append(p)
    return Ideal(sing.base_ring, gens)


def rank_at(M: list, point: dict) -> int:
    """Rank of the skew matrix at an exact rational parameter point."""
    rows = []
    for row in M:
        vals = []
        for entry in row:
            v = entry.evaluate(point)
            if not v.is_constant():
                raise PolyError("point does not assign every parameter")
            vals.append(v.constant_value())
        rows.append(vals)
    r = scalar_rank(rows)
    if r % 2:
        raise PolyError("skew matrix has odd rank")
    return r


# ---------------------------------------------------------------------------
# nodal test points


def _upoly(coeffs):
    c = [QQ(x) for x in coeffs]
    while c and not c[-1]:
        c.pop()
    return c


def _umul(a, b):
    out = [QQ(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _upoly(out)


def _ueval(a, s):
    acc = QQ(0)
    for c in reversed(a):
        acc = acc * s + c
    return acc


def _uderiv(a):
    return _upoly([c * i for i, c in enumerate(a)][1:])


def _ugcd_is_const(a, b) -> bool:
    a, b = _upoly(a), _upoly(b)
    while b:
        if len(b) == 1:
            return True
        lead = b[-1]
        r = list(a)
        while len(r) >= len(b):
            if not r[-1]:
                r.pop()
                continue
            f = r[-1] / lead
            shift = len(r) - len(b)
            for i, c in enumerate(b):
                r[shift + i] -= f * c
            r = _upoly(r)
        a, b = b, r
    return len(a) == 1


def nodal_parameters(sing: CurveSingularity, nodes, cofactor=None):
    """Exact parameter point whose fiber has the prescribed nodes.

    A-series (q = 2): `nodes` is a list of distinct rational x-positions;
    the fiber is y^2 + prod (x - s)^2 * c(x) with c monic, chosen (or given
    via `cofactor`, a low-to-high rational coefficient list) so that the
    x^(p-1) coefficient vanishes.  The node count is certified by gcd
    checks.  Other types: `nodes` is a single (x0, y0) with nonzero
    coordinates; the coefficients of x, y and 1 are solved linearly.

    Returns (point dict, certified node count).
    """
    if sing.q == 2:
        slist = [rat(s) for s in nodes]
        if len(set(slist)) != len(slist):
            raise PolyError("degenerate node specification: repeated positions")
        m = len(slist)
        n = sing.p - 2 * m
        if n < 0:
            raise PolyError(f"too many nodes: at most {sing.p // 2}")
        sq = [QQ(1)]
        for s in slist:
            sq = _umul(sq, _umul([-s, QQ(1)], [-s, QQ(1)]))
        if cofactor is not None:
            c = _upoly([rat(x) for x in cofactor])
            if len(c) != n + 1 or c[-1] != 1:
                raise PolyError(f"cofactor must be monic of degree {n}")
        else:
            s_sum = sum(slist, QQ(0))
            if n == 0:
                if s_sum:
                    raise PolyError("degenerate node specification: positions must "
                                    "sum to zero when the cofactor is constant")
                c = [QQ(1)]
            else:
                c = [QQ(0)] * (n + 1)
                c[n] = QQ(1)
                c[n - 1] = 2 * s_sum
        P = _umul(sq, c)
        if len(P) != sing.p + 1 or P[sing.p] != 1 or P[sing.p - 1]:
            raise PolyError("degenerate node specification: x^(p-1) term survives")
        # certification: cofactor squarefree and avoiding the node positions
        if len(c) > 1 and not _ugcd_is_const(c, _uderiv(c)):
            raise PolyError("degenerate node specification: cofactor not squarefree")
        for s in slist:
            if not _ueval(c, s):
                raise PolyError("degenerate node specification: cofactor vanishes at a node")
        point = {}
        for name, (i, j) in zip(sing.param_names, sing.milnor_monomials):
            point[name] = P[i] if j == 0 else QQ(0)
        return point, m

    x0, y0 = rat(nodes[0]), rat(nodes[1])
    if not x0 or not y0:
        raise PolyError("degenerate node specification: coordinates must be nonzero")
    p, q = sing.p, sing.q
    ux = -p * x0 ** (p - 1)
    uy = -q * y0 ** (q - 1)
    u1 = -(x0 ** p + y0 ** q + ux * x0 + uy * y0)
    coeff_of = {(1, 0): ux, (0, 1): uy, (0, 0): u1}
    point = {}
    for name, mono in zip(sing.param_names, sing.milnor_monomials):
        point[name] = coeff_of.get(mono, QQ(0))
    return point, 1


# ---------------------------------------------------------------------------
# Poisson structure


class PoissonStructure:
    """Bracket of the symplectic form: {f, g} = -(grad f)^t W^(-1) (grad g).

    det W is a nonzero rational constant, so W^(-1) = adj(W)/det(W) has
    polynomial entries and brackets of polynomials are polynomials.
    """

    def __init__(self, sing: CurveSingularity, W: list):
        self.sing = sing
        self.W = W
        d = det(W)
        if d.is_zero() or not d.is_constant():
            raise PolyError("det W must be a nonzero rational constant")
        self.detW = d.constant_value()
        self.adj = adjugate(W)

    def bracket(self, f: Poly, g: Poly) -> Poly:
        ring = f.ring
        names = self.sing.param_names
        df = [f.partial(n) for n in names]
        dg = [g.partial(n) for n in names]
        acc = ring.zero
        for i, fi in enumerate(df):
            if fi.is_zero():
                continue
            for j, gj in enumerate(dg):
                if gj.is_zero():
                    continue

                entry = self.adj[i][j]
                if not entry.is_zero():
                    acc = acc + fi * entry * gj
        return -acc / self.detW

    def coordinate_bracket(self, i: int, j: int) -> Poly:
        return -self.adj[i][j] / self.detW

    def jacobi_on_coordinates(self) -> bool:
        names = self.sing.param_names
        ring = self.sing.base_ring
        mu = len(names)
        for i in range(mu):
            for j in range(i + 1, mu):
                for k in range(j + 1, mu):
                    ui, uj, uk = (ring.var(n) for n in (names[i], names[j], names[k]))
                    s = (self.bracket(ui, self.bracket(uj, uk))
                         + self.bracket(uj, self.bracket(uk, ui))
                         + self.bracket(uk, self.bracket(ui, uj)))
                    if not s.is_zero():
                        return False
        return True


def poisson_bracket(P: PoissonStructure, f: Poly, g: Poly) -> Poly:
    return P.bracket(f, g)


def is_poisson_closed(P: PoissonStructure, I: Ideal,
                      budget: Optional[Budget] = None) -> bool:
    """True iff brackets of all generator pairs lie in I (biderivation =>
    generator pairs suffice)."""
    gens = I.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if not I.contains(P.bracket(gens[i], gens[j]), budget):
                return False
    return True


def is_closed_form(sing: CurveSingularity, W: list) -> bool:
    """dOmega = 0: cyclic derivative sum of the coefficient matrix vanishes."""
    names = sing.param_names
    mu = len(names)
    for i in range(mu):
        for j in range(i + 1, mu):
            for k in range(j + 1, mu):
                s = (W[j][k].partial(names[i])
                     - W[i][k].partial(names[j])
                     + W[i][j].partial(names[k]))
                if not s.is_zero():
                    return False
    return True


# ---------------------------------------------------------------------------
# presentation matrices and the Lie-closure experiment


def presentations(chi: list, M: list) -> dict:
    """M presents the intersection module; chi without its last row and
    column presents Ext^1 of the normalization structure sheaf."""
    chi_tilde = [row[:-1] for row in chi[:-1]]
    return {"intersection_module": M, "ext1": chi_tilde}


def lie_closure_check(sing: CurveSingularity, M: list,
                      budget: Optional[Budget] = None) -> bool:
    """Do the vector fields given by the columns of M = chi W chi^t close
    under the Lie bracket, modulo the module they generate?"""
    ring = sing.base_ring
    names = sing.param_names
    mu = sing.mu
    cols = [[M[r][c] for r in range(mu)] for c in range(mu)]
    gens = []
    zero_exp = (0,) * len(names)
    for v in cols:
        g = {}
        for comp, p in enumerate(v):
            for e, cf in p.terms.items():
                g[(comp, e)] = cf
        if g:
            gens.append(g)
    order = SchreyerOrder(ring, [zero_exp] * mu)
    gb = mod_buchberger(gens, order, budget)
    for a in range(len(cols)):
        for b in range(a + 1, len(cols)):
            if budget is not None:
                budget.check()
            va, vb = cols[a], cols[b]
            lie = []
            for k in range(mu):
                acc = ring.zero
                for l in range(mu):
                    acc = acc + va[l] * vb[k].partial(names[l])
                    acc = acc - vb[l] * va[k].partial(names[l])
                lie.append(acc)
            g = {}
            for comp, p in enumerate(lie):
                for e, cf in p.terms.items():
                    g[(comp, e)] = cf
            if g and not mod_member(g, gb, order, budget):
                return False
    return True
