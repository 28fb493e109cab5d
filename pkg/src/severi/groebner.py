"""Buchberger-style Groebner bases over Q, with ideal-level queries.

Normal forms, reduced bases, ideal equality, Krull dimension and degree
(via the Hilbert series of the leading-term ideal).  Deterministic: normal
pair-selection strategy by weighted lcm degree with index tie-breaks, so
reduced bases are bit-stable for a fixed input and order.
"""

from __future__ import annotations

import time
from typing import Iterable, Optional, Sequence

from .ring import (
    MonomialOrder,
    Poly,
    PolyError,
    PolyRing,
    exp_add,
    exp_divides,
    exp_lcm,
    exp_sub,
)


class BudgetExceeded(RuntimeError):
    """Raised when a caller-supplied time budget runs out; carries the stage name."""

    def __init__(self, stage: str, seconds: float):
        super().__init__(f"budget exceeded in {stage} after {seconds:.1f}s")
        self.stage = stage
        self.seconds = seconds


class Budget:
    """Wall-clock budget shared across a computation; None = unlimited."""

    def __init__(self, seconds: Optional[float] = None, stage: str = "groebner"):
        self.seconds = seconds
        self.stage = stage
        self.start = time.monotonic()

    def check(self):
        if self.seconds is not None and time.monotonic() - self.start > self.seconds:
            raise BudgetExceeded(self.stage, time.monotonic() - self.start)


# ---------------------------------------------------------------------------
# division / normal form


def normal_form(p: Poly, basis: Sequence[Poly], budget: Optional[Budget] = None) -> Poly:
    """Remainder of p under multivariate division by basis.

    No term of the result is divisible by any basis leading monomial;
    normal_form(p, G) == 0 iff p lies in the ideal when G is a Groebner basis.
    """
    if p.is_zero() or not basis:
        return p
    import heapq
    ring = p.ring
    key = ring.order.key
    negcache: dict = {}

    def negkey(e):
        nk = negcache.get(e)
        if nk is None:
            nk = tuple(-x for x in key(e))
            negcache[e] = nk
        return nk

    div = [(g.leading_monomial(), g.leading_coeff(), g) for g in basis if not g.is_zero()]
    tail = dict(p.terms)
    heap = [(negkey(e), e) for e in tail]
    heapq.heapify(heap)
    result: dict = {}
    while heap:
        if budget is not None:
            budget.check()
        _, exp = heapq.heappop(heap)
        if exp not in tail:
            continue
        coeff = tail.pop(exp)
        hit = None
        for lm, lc, g in div:
            if exp_divides(lm, exp):
                hit = (lm, lc, g)
                break
        if hit is None:
            result[exp] = coeff
            continue
        lm, lc, g = hit
        shift = exp_sub(exp, lm)
        factor = coeff / lc
        for ge, gc in g.terms.items():
            if ge == lm:
                continue
            ne = exp_add(ge, shift)
            cur = tail.get(ne)
            if cur is None:
                val = -(factor * gc)
                if val:
                    tail[ne] = val
                    heapq.heappush(heap, (negkey(ne), ne))
            else:
                val = cur - factor * gc
                if val:
                    tail[ne] = val
                else:
                    del tail[ne]
    return Poly(ring, result)


def _spoly(f: Poly, g: Poly) -> Poly:
    lmf, lcf = f.leading_term()
    lmg, lcg = g.leading_term()
    l = exp_lcm(lmf, lmg)
    mf = Poly(f.ring, {exp_sub(l, lmf): 1 / lcf})
    mg = Poly(g.ring, {exp_sub(l, lmg): 1 / lcg})
    return mf * f - mg * g


def buchberger(gens: Sequence[Poly], budget: Optional[Budget] = None) -> list:
    """A (non-reduced) Groebner basis for the ideal generated by gens."""
    ring = gens[0].ring
    key = ring.order.key
    mw = ring.monomial_weight
    G: list = []
    lms: list = []
    for g in gens:
        if not g.is_zero():
            G.append(g.monic())
            lms.append(G[-1].leading_monomial())

    pairs = {}

    def add_pairs(j):
        lmj = lms[j]
        for i in range(j):
            l = exp_lcm(lms[i], lmj)
            # coprime criterion
            if l == exp_add(lms[i], lmj):
                continue
            pairs[(i, j)] = l

    for j in range(len(G)):
        add_pairs(j)

    while pairs:
        if budget is not None:
            budget.check()
        # normal strategy: smallest weighted lcm degree, tie by index
        (i, j), l = min(pairs.items(), key=lambda kv: (mw(kv[1]), kv[0]))
        del pairs[(i, j)]
        # chain criterion
        skip = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            if exp_divides(lms[k], l):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a not in pairs and b not in pairs:
                    skip = True
                    break
        if skip:
            continue
        s = _spoly(G[i], G[j])
        r = normal_form(s, G, budget)
        if not r.is_zero():
            G.append(r.monic())
            lms.append(G[-1].leading_monomial())
            add_pairs(len(G) - 1)
    return G


def reduce_basis(G: Sequence[Poly], budget: Optional[Budget] = None) -> list:
    """Interreduce to the unique reduced Groebner basis, sorted descending."""
    key = None
    G = [g for g in G if not g.is_zero()]
    if not G:
        return []
    ring = G[0].ring
    key = ring.order.key
    # minimal set of leading monomials
    G = sorted(G, key=lambda g: key(g.leading_monomial()))
    minimal = []
    for g in G:
        lm = g.leading_monomial()
        if not any(exp_divides(h.leading_monomial(), lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        r = normal_form(g, others, budget)
        if not r.is_zero():
            reduced.append(r.monic())
    reduced.sort(key=lambda g: key(g.leading_monomial()), reverse=True)
    return reduced


def groebner_basis(gens: Sequence[Poly], budget: Optional[Budget] = None) -> list:
    return reduce_basis(buchberger(gens, budget), budget)


# ---------------------------------------------------------------------------
# ideals


class Ideal:
    """Generator list with a cached reduced Groebner basis."""

    def __init__(self, ring: PolyRing, generators: Iterable[Poly]):
        self.ring = ring
        self.generators = [g for g in generators]
        self._gb: Optional[list] = None

    def groebner(self, budget: Optional[Budget] = None) -> list:
        if self._gb is None:
            gens = [g for g in self.generators if not g.is_zero()]
            if not gens:
                self._gb = []
            else:
                self._gb = groebner_basis(gens, budget)
        return self._gb

    def set_cached_basis(self, basis: list):
        self._gb = list(basis)

    def normal_form(self, p: Poly, budget: Optional[Budget] = None) -> Poly:
        return normal_form(p, self.groebner(budget), budget)

    def contains(self, p: Poly, budget: Optional[Budget] = None) -> bool:
        return self.normal_form(p, budget).is_zero()

    def leading_monomials(self, budget: Optional[Budget] = None) -> list:
        return [g.leading_monomial() for g in self.groebner(budget)]

    def is_zero(self) -> bool:
        return all(g.is_zero() for g in self.generators)

    def is_unit(self, budget: Optional[Budget] = None) -> bool:
        gb = self.groebner(budget)
        return any(g.is_constant() and not g.is_zero() for g in gb)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    def __hash__(self):
        raise TypeError("unhashable: Ideal equality is semantic")

    def dimension(self, budget: Optional[Budget] = None) -> int:
        return dimension(self, budget)

    def degree(self, budget: Optional[Budget] = None) -> int:
        return degree(self, budget)

    def codimension(self, budget: Optional[Budget] = None) -> int:
        return len(self.ring.names) - self.dimension(budget)


def ideal_equal(I: Ideal, J: Ideal, budget: Optional[Budget] = None) -> bool:
    """True iff the reduced Groebner bases coincide (same ring and order)."""
    if I.ring != J.ring:
        raise PolyError("ideal comparison requires the same ring and order")
    gi = I.groebner(budget)
    gj = J.groebner(budget)
    return gi == gj


# ---------------------------------------------------------------------------
# dimension & degree via the leading-term ideal


def _minimal_monomials(exps: Iterable[tuple]) -> list:
    exps = sorted(set(exps), key=sum)
    out = []
    for e in exps:
        if not any(exp_divides(m, e) for m in out):
            out.append(e)
    return out


def dimension(I: Ideal, budget: Optional[Budget] = None) -> int:
    """Krull dimension of R/I via independent variable sets of LT(I)."""
    if I.is_unit(budget):
        raise PolyError("empty variety: unit ideal")
    lms = _minimal_monomials(I.leading_monomials(budget))
    n = len(I.ring.names)
    if not lms:
        return n
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in lms]
    from itertools import combinations

    for size in range(n, -1, -1):
        for S in combinations(range(n), size):
            sset = set(S)
            if all(not supp <= sset for supp in supports):
                return size
    return 0


def hilbert_numerator(lms: Sequence[tuple]) -> list:
    """Numerator K(t) of the standard-graded Hilbert series of R/(lms).

    HS(t) = K(t) / (1-t)^n.  Returned as an integer coefficient list.
    """
    gens = [tuple(m) for m in _minimal_monomials(lms)]
    return list(_hilbert_rec(tuple(sorted(gens))))


from functools import lru_cache


@lru_cache(maxsize=200000)
def _hilbert_rec(gens: tuple) -> list:
    if not gens:
        return [1]
    if any(sum(m) == 0 for m in gens):
        return [0]
    # base case: all generators are pure powers of distinct variables
    supports = [tuple(i for i, e in enumerate(m) if e) for m in gens]
    if all(len(s) == 1 for s in supports) and len({s[0] for s in supports}) == len(gens):
        out = [1]
        for m in gens:
            out = _poly_mul_1mt(out, sum(m))
        return out
    # pivot: a variable occurring in the most generators among non-pure gens
    from collections import Counter

    counts: Counter = Counter()
    for m, s in zip(gens, supports):
        if len(s) > 1:
            for i in s:
                counts[i] += 1
    pivot = counts.most_common(1)[0][0]
    # I = (gens); K(I) = K(I + (x)) + t * K(I : x)
    plus = tuple(sorted({_unit_exp(len(gens[0]), pivot)} | {m for m in gens if m[pivot] == 0}))
    colon = tuple(
        sorted(_minimal_monomials([_divide_by_var(m, pivot) for m in gens]))
    )
    k_plus = _hilbert_rec(plus)
    k_colon = _hilbert_rec(colon)
    size = max(len(k_plus), len(k_colon) + 1)
    out = [0] * size
    for i, c in enumerate(k_plus):
        out[i] += c
    for i, c in enumerate(k_colon):
        out[i + 1] += c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _unit_exp(n: int, i: int) -> tuple:
    return tuple(1 if j == i else 0 for j in range(n))


def _divide_by_var(m: tuple, i: int) -> tuple:
    if m[i]:
        return m[:i] + (m[i] - 1,) + m[i + 1 :]
    return m


def _poly_mul_1mt(coeffs: list, d: int) -> list:
    """Multiply an integer polynomial by (1 - t^d)."""
    out = list(coeffs) + [0] * d
    for i, c in enumerate(coeffs):
        out[i + d] -= c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def hilbert_data(I: Ideal, budget: Optional[Budget] = None) -> dict:
    """Dimension and degree of R/I from the leading-term ideal."""
    if I.is_unit(budget):
        raise PolyError("empty variety: unit ideal")
    n = len(I.ring.names)
    K = hilbert_numerator(I.leading_monomials(budget))
    # strip (1-t) factors: K(t) = (1-t)^c * Ktilde(t), dim = n - c
    c = 0
    while sum(K) == 0:
        K = _divide_1mt(K)
        c += 1
    return {"dimension": n - c, "codimension": c, "degree": sum(K), "numerator": K}


def _divide_1mt(K: list) -> list:
    # exact division by (1 - t)
    out = [0] * (len(K) - 1)
    acc = 0
    for i in range(len(K) - 1):
        acc += K[i]
        out[i] = acc
    if acc + K[-1] != 0:
        raise ArithmeticError("inexact division by (1-t)")
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def degree(I: Ideal, budget: Optional[Budget] = None) -> int:
    return hilbert_data(I, budget)["degree"]


def staircase_count(lms: Sequence[tuple], box: int) -> int:
    """Brute-force count of standard monomials with all exponents < box.

    Oracle used by tests to validate dimension/degree on small monomial ideals.
    """
    from itertools import product

    mins = _minimal_monomials(lms)
    n = len(mins[0]) if mins else 0
    count = 0
    for e in product(range(box), repeat=n):
        if not any(exp_divides(m, e) for m in mins):
            count += 1
    return count


def multiplicity(I: Ideal, budget: Optional[Budget] = None) -> int:
    """Hilbert-Samuel multiplicity of R/I at the origin.

    Requires weighted-homogeneous generators.  Every weighted-degree slice
    of the ring is then finite-dimensional, so ordinary Buchberger
    terminates even for the local degree order "ds", and the multiplicity
    is the standard-graded degree of the local leading-term ideal (the
    degree of the tangent cone at 0).
    """
    ring = I.ring
    local = PolyRing(ring.names, ring.weights, MonomialOrder("ds", ring.weights))
    gens = []
    for g in I.generators:
        if g.is_zero():
            continue
        if len(g.weights_of_terms()) != 1:
            raise PolyError("multiplicity requires weighted-homogeneous generators")
        gens.append(Poly(local, dict(g.terms)))
    if not gens:
        raise PolyError("multiplicity of the zero ideal")
    G = buchberger(gens, budget)
    K = hilbert_numerator([g.leading_monomial() for g in G])
    if sum(K) == 0 and all(c == 0 for c in K):
        raise PolyError("empty variety: unit ideal")
    while sum(K) == 0:
        K = _divide_1mt(K)
    return sum(K)
