"""Sparse exact multivariate polynomials with weighted monomial orders.

The universal currency of the package: every matrix entry, ideal generator
and series coefficient is a Poly over Q (or over a cyclotomic field during
the period computation).  Values are immutable and hashable.
"""

from __future__ import annotations

import re
from typing import Iterable, Optional

from .cyclotomic import Cyclo, CycloField
from .rationals import QQ, rat, rat_str


class PolyError(ValueError):
    pass


class MonomialOrder:
    """Total multiplicative well-order on monomials.

    kinds:
      'wgrevlex'   weighted graded reverse lexicographic
      'block'      first `block` variables >> the rest, wgrevlex inside blocks
      'lex'        lexicographic
    """

    __slots__ = ("kind", "weights", "block", "_cache")

    def __init__(self, kind: str, weights: tuple, block: int = 0):
        if kind not in ("wgrevlex", "block", "lex", "ds"):
            raise PolyError(f"unknown order kind {kind!r}")
        self.kind = kind
        self.weights = tuple(int(w) for w in weights)
        if any(w <= 0 for w in self.weights):
            raise PolyError("weights must be strictly positive")
        self.block = block
        self._cache = {}

    def key(self, exp: tuple):
        """Sort key; larger key = larger monomial."""
        k = self._cache.get(exp)
        if k is not None:
            return k
        w = self.weights
        if self.kind == "lex":
            k = exp
        elif self.kind == "ds":
            # local degree order: lower total degree = larger monomial
            k = (-sum(exp),) + tuple(-e for e in reversed(exp))
        elif self.kind == "wgrevlex":
            d = sum(e * wi for e, wi in zip(exp, w))
            k = (d,) + tuple(-e for e in reversed(exp))
        else:
            b = self.block
            e1, e2 = exp[:b], exp[b:]
            d1 = sum(e * wi for e, wi in zip(e1, w[:b]))
            d2 = sum(e * wi for e, wi in zip(e2, w[b:]))
            k = (d1,) + tuple(-e for e in reversed(e1)) + (d2,) + tuple(-e for e in reversed(e2))
        self._cache[exp] = k
        return k

    def descriptor(self) -> str:
        return f"{self.kind}:{','.join(map(str, self.weights))}:{self.block}"

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and (self.kind, self.weights, self.block) == (other.kind, other.weights, other.block)
        )

    def __hash__(self):
        return hash((self.kind, self.weights, self.block))

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}, {self.weights}, block={self.block})"


class PolyRing:
    """Ordered variable names with positive integer weights and a monomial order."""

    __slots__ = ("names", "weights", "order", "scalars", "_index", "zero", "one")

    def __init__(self, names, weights, order: Optional[MonomialOrder] = None, scalars=None):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise PolyError("variable names must be unique")
        self.weights = tuple(int(w) for w in weights)
        if len(self.weights) != len(self.names):
            raise PolyError("one weight per variable required")
        if any(w <= 0 for w in self.weights):
            raise PolyError("weights must be strictly positive")
        self.order = order or MonomialOrder("wgrevlex", self.weights)
        self.scalars = scalars  # None -> rationals; CycloField -> cyclotomic
        self._index = {n: i for i, n in enumerate(self.names)}
        self.zero = Poly(self, {})
        self.one = Poly(self, {(0,) * len(self.names): self.coerce_scalar(1)})

    # -- scalars ---------------------------------------------------------
    def coerce_scalar(self, c):
        if self.scalars is None:
            if isinstance(c, Cyclo):
                if not c.is_rational():
                    raise PolyError("cyclotomic scalar in rational ring")
                return c.rational_value()
            return rat(c)
        if isinstance(c, Cyclo):
            if c.field is not self.scalars:
                raise PolyError("mixed cyclotomic fields")
            return c
        return self.scalars.scalar(rat(c))

    def scalar_one(self):
        return self.coerce_scalar(1)

    # -- construction ----------------------------------------------------
    def poly(self, terms: dict) -> "Poly":
        clean = {}
        for exp, c in terms.items():
            c = self.coerce_scalar(c)
            if c:
                exp = tuple(int(e) for e in exp)
                if len(exp) != len(self.names):
                    raise PolyError("exponent vector length mismatch")
                if any(e < 0 for e in exp):
                    raise PolyError("negative exponent")
                clean[exp] = c
        return Poly(self, clean)

    def var(self, name: str) -> "Poly":
        i = self.index(name)
        exp = tuple(1 if j == i else 0 for j in range(len(self.names)))
        return Poly(self, {exp: self.coerce_scalar(1)})

    def scalar(self, c) -> "Poly":
        c = self.coerce_scalar(c)
        if not c:
            return self.zero
        return Poly(self, {(0,) * len(self.names): c})

    def index(self, name: str) -> int:
        if name not in self._index:
            raise PolyError(f"unknown variable {name!r}")
        return self._index[name]

    def monomial_weight(self, exp: tuple) -> int:
        return sum(e * w for e, w in zip(exp, self.weights))

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.names, self.weights, order, self.scalars)

    def with_scalars(self, scalars) -> "PolyRing":
        return PolyRing(self.names, self.weights, self.order, scalars)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.weights == other.weights
            and self.order == other.order
            and self.scalars is other.scalars
        )

    def __hash__(self):
        return hash((self.names, self.weights, self.order, id(self.scalars)))

    def __repr__(self):
        return f"PolyRing({self.names}, {self.weights})"

    # -- parsing / printing ----------------------------------------------
    def parse(self, text: str) -> "Poly":
        return _parse(self, text)


_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*|\d+|\^|\*|\+|-|/)")


def _parse(ring: PolyRing, text: str) -> "Poly":
    """Parse the canonical format: sums of terms 'p/q*a^2*b'."""
    pos, n = 0, len(text)
    tokens = []
    while pos < n:
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise PolyError(f"cannot parse {text[pos:pos+20]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    terms: dict = {}
    i = 0
    nv = len(ring.names)

    def flush(exp, coeff, sign):
        c = coeff * sign
        if c:
            key = tuple(exp)
            cur = terms.get(key)
            new = c if cur is None else cur + c
            if new:
                terms[key] = new
            else:
                terms.pop(key, None)

    while i < len(tokens):
        sign = 1
        while i < len(tokens) and tokens[i] in "+-":
            if tokens[i] == "-":
                sign = -sign
            i += 1
        if i >= len(tokens):
            raise PolyError("dangling sign")
        coeff = QQ(1)
        exp = [0] * nv
        expect_factor = True
        while i < len(tokens):
            tok = tokens[i]
            if tok in "+-":
                break
            if tok == "*":
                i += 1
                expect_factor = True
                continue
            if not expect_factor:
                raise PolyError(f"unexpected token {tok!r}")
            if tok.isdigit():
                num = int(tok)
                i += 1
                if i < len(tokens) and tokens[i] == "/":
                    i += 1
                    if i >= len(tokens) or not tokens[i].isdigit():
                        raise PolyError("malformed rational")
                    coeff *= QQ(num, int(tokens[i]))
                    i += 1
                else:
                    coeff *= num
            else:
                j = ring.index(tok)
                i += 1
                power = 1
                if i < len(tokens) and tokens[i] == "^":
                    i += 1
                    if i >= len(tokens) or not tokens[i].isdigit():
                        raise PolyError("malformed exponent")
                    power = int(tokens[i])
                    i += 1
                exp[j] += power
            expect_factor = False
        flush(exp, QQ(1) * coeff, sign)
    p = ring.poly(terms)
    return p


class Poly:
    """Immutable sparse polynomial; no stored zero coefficients."""

    __slots__ = ("ring", "terms", "_hash", "_sorted")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None
        self._sorted = None

    # -- basic protocol ----------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring.names == other.ring.names and self.terms == other.terms
        if isinstance(other, (int,)) or type(other) is type(QQ(1)):
            return self.terms == self.ring.scalar(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.names, frozenset(self.terms.items())))
        return self._hash

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring.names != self.ring.names:
                raise PolyError("mixed rings")
            return other
        return self.ring.scalar(other)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for exp, c in b.items():
            cur = out.get(exp)
            if cur is None:
                out[exp] = c
            else:
                s = cur + c
                if s:
                    out[exp] = s
                else:
                    del out[exp]
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = self.ring.coerce_scalar(other)
            if not c:
                return self.ring.zero
            return Poly(self.ring, {e: cc * c for e, cc in self.terms.items()})
        other = self._coerce(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return self.ring.zero
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                cur = out.get(exp)
                prod = ca * cb
                if cur is None:
                    out[exp] = prod
                else:
                    s = cur + prod
                    if s:
                        out[exp] = s
                    else:
                        del out[exp]
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise PolyError("negative power")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __truediv__(self, scalar):
        c = self.ring.coerce_scalar(scalar)
        if not c:
            raise ZeroDivisionError
        if isinstance(c, Cyclo):
            inv = c.inverse()
        else:
            inv = 1 / c
        return self * inv

    # -- structure ----------------------------------------------------------
    def sorted_terms(self):
        """Terms sorted descending in the ring's monomial order."""
        if self._sorted is None:
            key = self.ring.order.key
            self._sorted = sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)
        return self._sorted

    def leading_term(self):
        if not self.terms:
            raise PolyError("zero polynomial has no leading term")
        return self.sorted_terms()[0]

    def leading_monomial(self) -> tuple:
        return self.leading_term()[0]

    def leading_coeff(self):
        return self.leading_term()[1]

    def monic(self) -> "Poly":
        lc = self.leading_coeff()
        if isinstance(lc, Cyclo):
            inv = lc.inverse()
        else:
            inv = 1 / lc
        return self * inv

    def coeff(self, exp: tuple):
        return self.terms.get(tuple(exp), self.ring.coerce_scalar(0))

    def constant_value(self):
        z = (0,) * len(self.ring.names)
        for e in self.terms:
            if e != z:
                raise PolyError("not a constant")
        return self.terms.get(z, self.ring.coerce_scalar(0))

    def is_constant(self) -> bool:
        z = (0,) * len(self.ring.names)
        return all(e == z for e in self.terms)

    def weights_of_terms(self) -> set:
        mw = self.ring.monomial_weight
        return {mw(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.weights_of_terms()) <= 1

    def total_degree(self) -> int:
        if not self.terms:
            raise PolyError("zero polynomial has no degree")
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def variables_used(self) -> set:
        used = set()
        for e in self.terms:
            for i, p in enumerate(e):
                if p:
                    used.add(self.ring.names[i])
        return used

    def map_coeffs(self, fn, ring: Optional[PolyRing] = None) -> "Poly":
        ring = ring or self.ring
        out = {}
        for e, c in self.terms.items():
            v = fn(c)
            v = ring.coerce_scalar(v)
            if v:
                out[e] = v
        return Poly(ring, out)

    # -- calculus / evaluation -----------------------------------------------
    def partial(self, name: str) -> "Poly":
        i = self.ring.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1 :]
                nc = c * e[i]
                cur = out.get(ne)
                out[ne] = nc if cur is None else cur + nc
        return Poly(self.ring, {e: c for e, c in out.items() if c})

    def evaluate(self, assignment: dict) -> "Poly":
        """Substitute exact scalars for some variables; others stay symbolic."""
        idx = {self.ring.index(n): self.ring.coerce_scalar(v) for n, v in assignment.items()}
        out: dict = {}
        for e, c in self.terms.items():
            val = c
            ne = list(e)
            for i, v in idx.items():
                if e[i]:
                    val = val * v ** e[i]
                    ne[i] = 0
            if val:
                key = tuple(ne)
                cur = out.get(key)
                s = val if cur is None else cur + val
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return Poly(self.ring, out)

    def substitute_polys(self, assignment: dict) -> "Poly":
        """Substitute polynomials (in any single ring) for all variables."""
        target = None
        for v in assignment.values():
            target = v.ring
            break
        if target is None:
            raise PolyError("empty substitution")
        result = target.zero
        for e, c in self.terms.items():
            term = target.scalar(c)
            for i, p in enumerate(e):
                if p:
                    term = term * assignment[self.ring.names[i]] ** p
            result = result + term
        return result

    # -- printing -------------------------------------------------------------
    def format(self) -> str:
        """Canonical text format: order-sorted terms, 'p/q' coefficients."""
        if not self.terms:
            return "0"
        parts = []
        for k, (e, c) in enumerate(self.sorted_terms()):
            mono = "*".join(
                n if p == 1 else f"{n}^{p}" for n, p in zip(self.ring.names, e) if p
            )
            if isinstance(c, Cyclo):
                cs = f"({c!r})"
                neg = False
            else:
                neg = c < 0
                cabs = -c if neg else c
                cs = rat_str(cabs)
            if mono:
                body = mono if cs == "1" else f"{cs}*{mono}"
            else:
                body = cs
            if k == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    __str__ = format

    def __repr__(self):
        return f"<Poly {self.format()}>"


def wdeg(p: Poly):
    """Common weighted degree of a weighted-homogeneous polynomial.

    Returns the integer degree, or the set of distinct term weights when the
    polynomial is inhomogeneous.  The zero polynomial has no degree.
    """
    if p.is_zero():
        raise PolyError("undefined degree: zero polynomial")
    ws = p.weights_of_terms()
    if len(ws) == 1:
        return next(iter(ws))
    return ws


def partial(p: Poly, name: str) -> Poly:
    return p.partial(name)


def evaluate(p: Poly, assignment: dict) -> Poly:
    return p.evaluate(assignment)


def parse(ring: PolyRing, text: str) -> Poly:
    return ring.parse(text)


def exp_divides(a: tuple, b: tuple) -> bool:
    """True when monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def exp_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def exp_sub(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def exp_add(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))
