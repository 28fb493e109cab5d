"""Free resolutions: Schreyer syzygies, minimalization, Betti numbers.

The resolution pipeline is: reduced Groebner basis of the ideal, iterated
Schreyer syzygies (each level is automatically a Groebner basis for the
induced order), then minimalization of the resulting graded complex by
cancelling nonzero scalar entries.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .groebner import Budget, groebner_basis, normal_form
from .ring import (Poly, PolyError, PolyRing, exp_add, exp_divides,
                   exp_lcm, exp_sub, wdeg)


# ---------------------------------------------------------------------------
# module elements: dict {(component, exponent): coeff}


class SchreyerOrder:
    """Module order induced by anchor monomials, ties by smaller component."""

    def __init__(self, ring: PolyRing, anchors: Sequence[tuple]):
        self.ring = ring
        self.anchors = list(anchors)
        self._cache: dict = {}

    def key(self, term):
        k = self._cache.get(term)
        if k is None:
            c, e = term
            k = (self.ring.order.key(exp_add(e, self.anchors[c])), -c)
            self._cache[term] = k
        return k


def _mod_add_into(acc: dict, other: dict, scale=None, shift=None):
    for (c, e), v in other.items():
        if shift is not None:
            e = exp_add(e, shift)
        if scale is not None:
            v = v * scale
        key = (c, e)
        cur = acc.get(key)
        s = v if cur is None else cur + v
        if s:
            acc[key] = s
        else:
            acc.pop(key, None)


def _mod_lead(p: dict, order):
    return max(p, key=order.key)


def _neg_flat(k, out):
    for x in k:
        if isinstance(x, tuple):
            _neg_flat(x, out)
        else:
            out.append(-x)


def mod_normal_form(p: dict, basis: list, order, quotients: Optional[list] = None,
                    budget: Optional[Budget] = None) -> dict:
    """Divide module element p by basis; optionally track quotients.

    The still-unprocessed terms are tracked with a lazy max-heap keyed by
    the (negated) module order key, so division is near-linear in the
    number of term updates rather than quadratic.
    """
    import heapq

    negcache: dict = {}

    def negkey(term):
        nk = negcache.get(term)
        if nk is None:
            out: list = []
            _neg_flat(order.key(term), out)
            nk = tuple(out)
            negcache[term] = nk
        return nk

    tail = dict(p)
    heap = [(negkey(t), t) for t in tail]
    heapq.heapify(heap)
    result: dict = {}
    leads = [(_mod_lead(b, order), b) for b in basis]
    while heap:
        if budget is not None:
            budget.check()
        _, key = heapq.heappop(heap)
        if key not in tail:
            continue
        c, e = key
        coeff = tail.pop(key)
        hit = None
        for idx, ((bc, be), b) in enumerate(leads):
            if bc == c and exp_divides(be, e):
                hit = (idx, be, b)
                break
        if hit is None:
            result[key] = coeff
            continue
        idx, be, b = hit
        shift = exp_sub(e, be)
        factor = coeff / b[(c, be)]
        if quotients is not None:
            cur = quotients[idx].get(shift)
            s = factor if cur is None else cur + factor
            if s:
                quotients[idx][shift] = s
            else:
                quotients[idx].pop(shift, None)
        for (bc2, be2), bv in b.items():
            if (bc2, be2) == (c, be):
                continue
            k2 = (bc2, exp_add(be2, shift))
            cur = tail.get(k2)
            if cur is None:
                s = -(factor * bv)
                if s:
                    tail[k2] = s
                    heapq.heappush(heap, (negkey(k2), k2))
            else:
                s = cur - factor * bv
                if s:
                    tail[k2] = s
                else:
                    del tail[k2]
    return result


class ModGB:
    """Incremental Groebner basis of a submodule of a free module."""

    def __init__(self, order, budget: Optional[Budget] = None):
        self.order = order
        self.budget = budget
        self.G: list = []
        self.leads: list = []
        self.heap: list = []

    def _push_pairs(self, j):
        import heapq

        cj, ej = self.leads[j]
        for i in range(j):
            ci, ei = self.leads[i]
            if ci == cj:
                heapq.heappush(self.heap, (self.order.key((cj, exp_lcm(ei, ej))), i, j))

    def _append(self, g: dict):
        self.G.append(g)
        self.leads.append(_mod_lead(g, self.order))
        self._push_pairs(len(self.G) - 1)

    def add(self, g: dict):
        """Adjoin a generator and restore the Groebner property."""
        import heapq

        if not g:
            return
        self._append(dict(g))
        G, order = self.G, self.order
        while self.heap:
            if self.budget is not None:
                self.budget.check()
            _, i, j = heapq.heappop(self.heap)
            (ci, ei), (cj, ej) = self.leads[i], self.leads[j]
            l = exp_lcm(ei, ej)
            s: dict = {}
            _mod_add_into(s, G[i], scale=1 / G[i][(ci, ei)], shift=exp_sub(l, ei))
            _mod_add_into(s, G[j], scale=-(1 / G[j][(cj, ej)]), shift=exp_sub(l, ej))
            r = mod_normal_form(s, G, order, budget=self.budget)
            if r:
                self._append(r)

    def member(self, g: dict) -> bool:
        return not mod_normal_form(g, self.G, self.order, budget=self.budget)


def mod_buchberger(gens: list, order, budget: Optional[Budget] = None) -> list:
    """Groebner basis of a submodule of a free module."""
    gb = ModGB(order, budget)
    for g in gens:
        if g:
            gb.add(g)
    return gb.G


def mod_member(p: dict, gb: list, order, budget: Optional[Budget] = None) -> bool:
    return not mod_normal_form(p, gb, order, budget=budget)


# ---------------------------------------------------------------------------
# syzygies


def schreyer_syzygies(G: list, ring: PolyRing, order, budget: Optional[Budget] = None) -> list:
    """Syzygies of a module Groebner basis G (w.r.t. the given order).

    Every S-pair of G reduces to zero; the recorded cofactor vectors form a
    Groebner basis of the syzygy module for the induced Schreyer order.
    """
    syz = []
    leads = [_mod_lead(g, order) for g in G]
    for j in range(len(G)):
        cj, ej = leads[j]
        for i in range(j):
            ci, ei = leads[i]
            if ci != cj:
                continue
            if budget is not None:
                budget.check()
            l = exp_lcm(ei, ej)
            ui = exp_sub(l, ei)
            uj = exp_sub(l, ej)
            inv_i = 1 / G[i][(ci, ei)]
            inv_j = 1 / G[j][(cj, ej)]
            s: dict = {}
            _mod_add_into(s, G[i], scale=inv_i, shift=ui)
            _mod_add_into(s, G[j], scale=-inv_j, shift=uj)
            quotients = [dict() for _ in G]
            r = mod_normal_form(s, G, order, quotients=quotients, budget=budget)
            if r:
                raise PolyError("internal error: S-pair of a Groebner basis did not reduce to zero")
            vec: dict = {}
            vec[(i, ui)] = ring.coerce_scalar(1) * inv_i
            _mod_add_into(vec, {(j, uj): ring.coerce_scalar(1) * inv_j}, scale=-1)
            for k, q in enumerate(quotients):
                for e, cval in q.items():
                    _mod_add_into(vec, {(k, e): cval}, scale=-1)
            if vec:
                syz.append(vec)
    return syz


def syzygies(vectors: Sequence[Sequence[Poly]], budget: Optional[Budget] = None) -> list:
    """Generators of the syzygy module of arbitrary module generators.

    Runs module Buchberger with cofactor tracking over the inputs.  Every
    S-pair that reduces to zero produces a relation among the inputs, and
    by Schreyer's theorem these relations generate the syzygy module (pairs
    that produce a new basis element contribute the trivial relation).
    """
    import heapq

    vectors = [list(v) for v in vectors]
    if not vectors:
        return []
    ring = vectors[0][0].ring
    s = len(vectors)
    zero_exp = (0,) * len(ring.names)
    G: list = []
    cof: list = []
    for i, v in enumerate(vectors):
        g: dict = {}
        for c, p in enumerate(v):
            for e, coeff in p.terms.items():
                g[(c, e)] = coeff
        if g:
            G.append(g)
            cof.append({(i, zero_exp): ring.coerce_scalar(1)})

    ncomp = max((c for g in G for c, _ in g), default=0) + 1
    order = SchreyerOrder(ring, [zero_exp] * ncomp)
    leads = [_mod_lead(g, order) for g in G]
    heap: list = []

    def push_pairs(j):
        cj, ej = leads[j]
        for i in range(j):
            ci, ei = leads[i]
            if ci == cj:
                heapq.heappush(heap, (order.key((cj, exp_lcm(ei, ej))), i, j))

    for j in range(len(G)):
        push_pairs(j)
    out = []
    while heap:
        if budget is not None:
            budget.check()
        _, i, j = heapq.heappop(heap)
        (ci, ei), (cj, ej) = leads[i], leads[j]
        l = exp_lcm(ei, ej)
        ui, uj = exp_sub(l, ei), exp_sub(l, ej)
        inv_i = 1 / G[i][(ci, ei)]
        inv_j = 1 / G[j][(cj, ej)]
        sp: dict = {}
        _mod_add_into(sp, G[i], scale=inv_i, shift=ui)
        _mod_add_into(sp, G[j], scale=-inv_j, shift=uj)
        quotients = [dict() for _ in G]
        r = mod_normal_form(sp, G, order, quotients=quotients, budget=budget)
        rel: dict = {}
        _mod_add_into(rel, cof[i], scale=inv_i, shift=ui)
        _mod_add_into(rel, cof[j], scale=-inv_j, shift=uj)
        for k, q in enumerate(quotients):
            for e, cval in q.items():
                _mod_add_into(rel, cof[k], scale=-cval, shift=e)
        if r:
            G.append(r)
            cof.append(rel)
            leads.append(_mod_lead(r, order))
            push_pairs(len(G) - 1)
        elif rel:
            vec = [ring.zero] * s
            for (c, e), coeff in rel.items():
                vec[c] = vec[c] + Poly(ring, {e: coeff})
            out.append(vec)
    return out


# ---------------------------------------------------------------------------
# resolutions


class FreeResolution:
    """Graded complex ... -> F_1 -> F_0 (-> I) with degree shifts per step.

    matrices[k] maps F_{k+1} -> F_k; matrices[k][i][j] is the coefficient of
    the i-th basis element of F_k in the image of the j-th of F_{k+1}.
    shifts[k] lists the weighted degrees of the basis of F_k.
    """

    def __init__(self, ring: PolyRing, matrices: list, shifts: list):
        self.ring = ring
        self.matrices = matrices
        self.shifts = shifts

    @property
    def betti(self) -> tuple:
        return tuple(len(s) for s in self.shifts)

    def length(self) -> int:
        return len(self.shifts)

    def check_complex(self) -> bool:
        for k in range(len(self.matrices) - 1):
            a, b = self.matrices[k], self.matrices[k + 1]
            if not a or not b:
                continue
            for i in range(len(a)):
                for j in range(len(b[0]) if b else 0):
                    acc = self.ring.zero
                    for m in range(len(b)):
                        acc = acc + a[i][m] * b[m][j]
                    if not acc.is_zero():
                        return False
        return True

    def is_minimal(self) -> bool:
        for mat in self.matrices:
            for row in mat:
                for p in row:
                    if not p.is_zero() and p.is_constant():
                        return False
        return True


def _module_elems_to_matrix(ring: PolyRing, elems: list, nrows: int) -> list:
    mat = [[ring.zero for _ in elems] for _ in range(nrows)]
    for j, g in enumerate(elems):
        cols: dict = {}
        for (c, e), coeff in g.items():
            cols.setdefault(c, {})[e] = coeff
        for c, terms in cols.items():
            mat[c][j] = Poly(ring, terms)
    return mat


def schreyer_resolution(gens: Sequence[Poly], budget: Optional[Budget] = None) -> FreeResolution:
    """A (generally non-minimal) graded free resolution of the ideal module."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise PolyError("resolution of the zero module")
    ring = gens[0].ring
    for g in gens:
        if not g.is_homogeneous():
            raise PolyError("resolution requires graded input")
    G0 = groebner_basis(gens, budget)
    mw = ring.monomial_weight
    # level 0: elements of the ideal, one component (component 0)
    elems = [{(0, e): c for e, c in g.terms.items()} for g in G0]
    anchors = [g.leading_monomial() for g in G0]
    shifts0 = [mw(a) for a in anchors]
    order = SchreyerOrder(ring, [(0,) * len(ring.names)])

    matrices = []
    shifts = [shifts0]
    nvars = len(ring.names)
    level = 0
    while True:
        syz = schreyer_syzygies(elems, ring, order, budget)
        if not syz:
            break
        # sort deterministically by leading term of the new level order
        new_order = SchreyerOrder(ring, anchors)
        syz.sort(key=lambda g: new_order.key(_mod_lead(g, new_order)), reverse=True)
        matrices.append(_module_elems_to_matrix(ring, syz, len(elems)))
        new_anchors = []
        new_shifts = []
        prev_shifts = shifts[-1]
        for g in syz:
            c, e = _mod_lead(g, new_order)
            new_anchors.append(exp_add(e, anchors[c]))
            new_shifts.append(mw(e) + prev_shifts[c])
        shifts.append(new_shifts)
        elems = syz
        order = new_order
        anchors = new_anchors
        level += 1
        if level > nvars + 1:
            raise PolyError("resolution exceeded the Hilbert syzygy bound")
    return FreeResolution(ring, matrices, shifts)


def minimalize(res: FreeResolution) -> FreeResolution:
    """Cancel nonzero scalar entries to reach the minimal graded resolution."""
    ring = res.ring
    mats = [[list(row) for row in m] for m in res.matrices]
    shifts = [list(s) for s in res.shifts]

    def find_unit(m):
        for i, row in enumerate(m):
            for j, p in enumerate(row):
                if not p.is_zero() and p.is_constant():
                    return i, j
        return None

    changed = True
    while changed:
        changed = False
        for k in range(len(mats)):
            m = mats[k]
            if not m or not m[0]:
                continue
            hit = find_unit(m)
            if hit is None:
                continue
            r, c = hit
            s = m[r][c]
            nrows, ncols = len(m), len(m[0])
            new = [
                [
                    m[i][j] - m[i][c] * m[r][j] / s.constant_value()
                    for j in range(ncols)
                    if j != c
                ]
                for i in range(nrows)
                if i != r
            ]
            mats[k] = new
            del shifts[k + 1][c]
            del shifts[k][r]
            if k + 1 < len(mats):
                mats[k + 1] = [row for i, row in enumerate(mats[k + 1]) if i != c]
            if k - 1 >= 0:
                mats[k - 1] = [[row[i] for i in range(len(row)) if i != r] for row in mats[k - 1]]
            changed = True
    # drop trailing zero modules
    while shifts and not shifts[-1]:
        shifts.pop()
        if mats:
            mats.pop()
    while mats and (not mats[-1] or not mats[-1][0]):
        mats.pop()
    return FreeResolution(ring, mats, shifts)


def minimal_ideal_gens(gens: Sequence[Poly], budget: Optional[Budget] = None) -> list:
    """Minimal homogeneous generating set: greedy by ascending degree,
    dropping anything already in the ideal of what was kept (graded Nakayama)."""
    gens = [g.monic() for g in gens if not g.is_zero()]
    ring = gens[0].ring
    gens.sort(key=lambda g: (wdeg(g), ring.order.key(g.leading_monomial())))
    kept: list = []
    gb: list = []
    for g in gens:
        if kept and normal_form(g, gb, budget).is_zero():
            continue
        kept.append(g)
        gb = groebner_basis(kept, budget)
    return kept


def _vector_degree(ring: PolyRing, v: Sequence[Poly], shifts: Sequence[int]) -> int:
    degs = set()
    for c, p in enumerate(v):
        if not p.is_zero():
            if not p.is_homogeneous():
                raise PolyError("resolution requires graded input")
            degs.add(wdeg(p) + shifts[c])
    if len(degs) != 1:
        raise PolyError("module element is not homogeneous")
    return degs.pop()


def _monomials_of_weight(weights: Sequence[int], w: int) -> list:
    """All exponent tuples with the given weighted degree."""
    out: list = []

    def rec(i: int, rem: int, cur: list):
        if i == len(weights) - 1:
            if rem % weights[i] == 0:
                out.append(tuple(cur) + (rem // weights[i],))
            return
        wi = weights[i]
        for k in range(rem // wi + 1):
            cur.append(k)
            rec(i + 1, rem - k * wi, cur)
            cur.pop()

    if w >= 0:
        rec(0, w, [])
    return out


def _row_reduce(r: dict, rows: dict, keyf) -> Optional[tuple]:
    """Reduce r against the triangular row set; return (residue, pivot) or None."""
    while r:
        t = max(r, key=keyf)
        piv = rows.get(t)
        if piv is None:
            return r, t
        factor = r[t] / piv[t]
        for t2, v2 in piv.items():
            cur = r.get(t2)
            s = -(factor * v2) if cur is None else cur - factor * v2
            if s:
                r[t2] = s
            else:
                r.pop(t2, None)
    return None


def minimal_module_gens(vectors: list, ring: PolyRing, shifts: Sequence[int],
                        budget: Optional[Budget] = None) -> list:
    """Minimal generators of a graded submodule of a shifted free module.

    Graded Nakayama by exact linear algebra: a homogeneous vector of degree d
    is redundant iff it lies in the rational span of monomial multiples of the
    lower-degree kept generators together with the same-degree kept ones.
    """
    vectors = [v for v in vectors if any(not p.is_zero() for p in v)]
    if not vectors:
        return []
    okey = ring.order.key
    keyf = lambda t: (okey(t[1]), -t[0])
    by_deg: dict = {}
    for v in vectors:
        by_deg.setdefault(_vector_degree(ring, v, shifts), []).append(v)
    kept: list = []
    kept_degs: list = []
    for d in sorted(by_deg):
        if budget is not None:
            budget.check()
        rows: dict = {}
        for g, dg in zip(kept, kept_degs):
            gterms = [(c, e, p) for c, vp in enumerate(g) if not vp.is_zero()
                      for e, p in vp.terms.items()]
            for alpha in _monomials_of_weight(ring.weights, d - dg):
                if budget is not None:
                    budget.check()
                r = {(c, exp_add(e, alpha)): cf for c, e, cf in gterms}
                red = _row_reduce(r, rows, keyf)
                if red is not None:
                    rows[red[1]] = red[0]
        for v in by_deg[d]:
            r = {}
            for c, p in enumerate(v):
                for e, cf in p.terms.items():
                    r[(c, e)] = cf
            red = _row_reduce(r, rows, keyf)
            if red is None:
                continue
            rows[red[1]] = red[0]
            kept.append(v)
            kept_degs.append(d)
    return kept


def minimal_resolution(gens: Sequence[Poly], budget: Optional[Budget] = None) -> FreeResolution:
    """Minimal graded free resolution, built level by level.

    Each level takes a minimal generating set before its syzygies are
    computed; syzygies of a minimal generating set contain no unit entries,
    so the resulting complex is minimal without a separate cancellation pass.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise PolyError("resolution of the zero module")
    ring = gens[0].ring
    for g in gens:
        if not g.is_homogeneous():
            raise PolyError("resolution requires graded input")
    level0 = minimal_ideal_gens(gens, budget)
    shifts = [[wdeg(g) for g in level0]]
    matrices: list = []
    vectors = [[g] for g in level0]
    cur_shifts = shifts[0]
    nvars = len(ring.names)
    for _ in range(nvars + 1):
        syz = syzygies(vectors, budget)
        if not syz:
            break
        syz = minimal_module_gens(syz, ring, cur_shifts, budget)
        mat = [[syz[j][i] for j in range(len(syz))] for i in range(len(vectors))]
        matrices.append(mat)
        cur_shifts = [_vector_degree(ring, v, cur_shifts) for v in syz]
        shifts.append(cur_shifts)
        vectors = syz
    else:
        raise PolyError("resolution exceeded the Hilbert syzygy bound")
    res = FreeResolution(ring, matrices, shifts)
    if not res.is_minimal():
        raise PolyError("internal error: resolution not minimal")
    return res


def betti(res: FreeResolution) -> tuple:
    return res.betti


def is_cohen_macaulay(ideal, budget: Optional[Budget] = None) -> dict:
    """codim / projective dimension / depth report for a graded ideal.

    Over the graded polynomial ring, depth(R/I) = nvars - pd(R/I) by
    Auslander-Buchsbaum, and R/I is Cohen-Macaulay iff pd equals codim.
    """
    res = minimal_resolution(ideal.generators, budget)
    pd = len(res.betti)  # resolution of I has length pd(R/I) - 1
    nvars = len(ideal.ring.names)
    codim = ideal.codimension(budget)
    return {
        "codim": codim,
        "pd": pd,
        "depth": nvars - pd,
        "cohen_macaulay": pd == codim,
        "betti": res.betti,
    }
