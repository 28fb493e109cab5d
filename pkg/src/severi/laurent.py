"""Truncated Laurent series in one formal variable t.

Coefficients are Poly values (polynomials in the deformation parameters,
possibly over a cyclotomic field).  A series knows its valuation, its
coefficients and a truncation bound: terms with exponent > trunc are
unknown, and every operation propagates the bound of guaranteed validity.
"""

from __future__ import annotations

from typing import Callable, Optional

from .ring import Poly, PolyRing


class TruncationError(ArithmeticError):
    pass


class LaurentError(ValueError):
    pass


class LaurentSeries:
    """coeffs[k] is the coefficient of t**(valuation + k); exponents > trunc unknown."""

    __slots__ = ("ring", "valuation", "coeffs", "trunc")

    def __init__(self, ring: PolyRing, valuation: int, coeffs: list, trunc: int):
        self.ring = ring
        # normalize: strip leading zeros, clip above trunc
        while coeffs and coeffs[0].is_zero():
            coeffs = coeffs[1:]
            valuation += 1
        if valuation + len(coeffs) - 1 > trunc:
            coeffs = coeffs[: trunc - valuation + 1]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        if not coeffs:
            valuation = 0
        self.ring = ring
        self.valuation = valuation
        self.coeffs = coeffs
        self.trunc = trunc

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, ring: PolyRing, trunc: int) -> "LaurentSeries":
        return cls(ring, 0, [], trunc)

    @classmethod
    def monomial(cls, ring: PolyRing, coeff, exponent: int, trunc: int) -> "LaurentSeries":
        c = coeff if isinstance(coeff, Poly) else ring.scalar(coeff)
        return cls(ring, exponent, [c], trunc)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, exponent: int) -> Poly:
        """Coefficient of t**exponent; exponent must be <= trunc."""
        if exponent > self.trunc:
            raise TruncationError(f"insufficient precision: t^{exponent} beyond trunc {self.trunc}")
        k = exponent - self.valuation
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.ring.zero

    def terms(self):
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                yield self.valuation + k, c

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        if self.ring.names != other.ring.names:
            raise LaurentError("mixed coefficient rings")
        trunc = min(self.trunc, other.trunc)
        if self.is_zero():
            return LaurentSeries(self.ring, other.valuation, list(other.coeffs), trunc)
        if other.is_zero():
            return LaurentSeries(self.ring, self.valuation, list(self.coeffs), trunc)
        val = min(self.valuation, other.valuation)
        top = min(max(self.valuation + len(self.coeffs), other.valuation + len(other.coeffs)) - 1, trunc)
        out = [self.ring.zero] * (top - val + 1)
        for series in (self, other):
            for i, c in enumerate(series.coeffs):
                e = series.valuation + i
                if e <= top:
                    out[e - val] = out[e - val] + c
        return LaurentSeries(self.ring, val, out, trunc)

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.ring, self.valuation, [-c for c in self.coeffs], self.trunc)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def scalar_mul(self, c) -> "LaurentSeries":
        p = c if isinstance(c, Poly) else self.ring.scalar(c)
        return LaurentSeries(self.ring, self.valuation, [x * p for x in self.coeffs], self.trunc)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        if self.ring.names != other.ring.names:
            raise LaurentError("mixed coefficient rings")
        # validity: a known to trunc Ta, b to Tb => product valid to
        # min(Ta + val_b, Tb + val_a)
        if self.is_zero() or other.is_zero():
            return LaurentSeries.zero(self.ring, min(self.trunc, other.trunc))
        trunc = min(self.trunc + other.valuation, other.trunc + self.valuation)
        val = self.valuation + other.valuation
        size = min(trunc - val + 1, len(self.coeffs) + len(other.coeffs) - 1)
        if size <= 0:
            return LaurentSeries.zero(self.ring, trunc)
        out = [self.ring.zero] * size
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            jmax = min(len(other.coeffs), size - i)
            for j in range(jmax):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return LaurentSeries(self.ring, val, out, trunc)

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by t**k."""
        return LaurentSeries(self.ring, self.valuation + k, list(self.coeffs), self.trunc + k)

    def map_coeffs(self, fn: Callable[[Poly], Poly]) -> "LaurentSeries":
        return LaurentSeries(self.ring, self.valuation, [fn(c) for c in self.coeffs], self.trunc)

    def truncate(self, trunc: int) -> "LaurentSeries":
        return LaurentSeries(self.ring, self.valuation, list(self.coeffs), min(self.trunc, trunc))

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (
            self.valuation == other.valuation
            and self.coeffs == other.coeffs
            and self.trunc == other.trunc
        )

    # -- the operations the residue recipe needs ------------------------------
    def invert_unit(self, normalize: Optional[Callable[[Poly], Poly]] = None) -> "LaurentSeries":
        """Inverse of a series whose leading coefficient is a nonzero scalar.

        The scalar-leading-term precondition is what keeps all series
        coefficients polynomial in the deformation parameters.  `normalize`
        is applied to each freshly computed coefficient; callers use it to
        discard graded components that cannot contribute downstream.
        """
        if self.is_zero():
            raise LaurentError("non-unit leading term: zero series")
        lead = self.coeffs[0]
        if not lead.is_constant():
            raise LaurentError("non-unit leading term: leading coefficient involves parameters")
        lc = lead.constant_value()
        v = self.valuation
        # self = lc * t^v (1 + n), invert by geometric series
        n_prec = self.trunc - v  # n known to exponent n_prec
        inv_lc = self.ring.scalar(1) / lc
        # work with exponent-0-based tail
        tail = [c * inv_lc for c in self.coeffs[1:]]
        out = [self.ring.one] + [self.ring.zero] * n_prec
        # out = 1 - n + n^2 - ... computed by out = 1 - n*out
        for k in range(1, n_prec + 1):
            acc = self.ring.zero
            for j, tc in enumerate(tail):
                e = j + 1
                if e > k:
                    break
                if not tc.is_zero() and not out[k - e].is_zero():
                    acc = acc + tc * out[k - e]
            out[k] = -acc if normalize is None else normalize(-acc)
        coeffs = [c * inv_lc for c in out]
        return LaurentSeries(self.ring, -v, coeffs, n_prec - v)

    def derivative(self) -> "LaurentSeries":
        out = []
        for k, c in enumerate(self.coeffs):
            e = self.valuation + k
            out.append(c * e)
        return LaurentSeries(self.ring, self.valuation - 1, out, self.trunc - 1)

    def formal_integral(self) -> "LaurentSeries":
        """Termwise antiderivative with zero constant term."""
        res = self.coefficient(-1) if self.valuation <= -1 <= self.trunc else self.ring.zero
        if not res.is_zero():
            raise LaurentError("nonzero residue obstructs integration")
        out = []
        for k, c in enumerate(self.coeffs):
            e = self.valuation + k
            if e == -1:
                out.append(self.ring.zero)
            else:
                out.append(c / (e + 1))
        return LaurentSeries(self.ring, self.valuation + 1, out, self.trunc + 1)

    def residue(self) -> Poly:
        """Coefficient of 1/t; requires the series to be known there."""
        if self.trunc < -1:
            raise TruncationError("insufficient precision for residue")
        k = -1 - self.valuation
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.ring.zero

    def __repr__(self):
        if self.is_zero():
            return f"<LaurentSeries 0 + O(t^{self.trunc + 1})>"
        parts = []
        for e, c in list(self.terms())[:6]:
            parts.append(f"({c})t^{e}")
        more = " + ..." if len(self.coeffs) > 6 else ""
        return f"<LaurentSeries {' + '.join(parts)}{more} + O(t^{self.trunc + 1})>"


def mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    return a * b


def add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    return a + b


def scalar_mul(a: LaurentSeries, c) -> LaurentSeries:
    return a.scalar_mul(c)


def invert_unit(a: LaurentSeries) -> LaurentSeries:
    return a.invert_unit()


def formal_integral(a: LaurentSeries) -> LaurentSeries:
    return a.formal_integral()


def residue(a: LaurentSeries) -> Poly:
    return a.residue()
