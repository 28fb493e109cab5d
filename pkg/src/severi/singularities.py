"""Quasihomogeneous irreducible plane-curve singularities and their versal data.

Every singularity here is f = x^p + y^q with gcd(p, q) = 1, quasihomogeneous
for weights w(x) = q, w(y) = p, total degree d = pq.  The miniversal
deformation adds one parameter per Milnor-algebra monomial, with parameter
weights chosen so the deformed equation stays weighted homogeneous.
"""

from __future__ import annotations

from math import gcd
from typing import Optional

from .ring import MonomialOrder, Poly, PolyError, PolyRing

CATALOG = {
    "A2": (3, 2),
    "A4": (5, 2),
    "A6": (7, 2),
    "A8": (9, 2),
    "E6": (3, 4),
    "E8": (3, 5),
}

_PARAM_LETTERS = "abcdefghijklmnopqrstuvw"  # x, y are reserved for the curve


def _param_names(n: int) -> tuple:
    if n <= len(_PARAM_LETTERS):
        return tuple(_PARAM_LETTERS[:n])
    return tuple(f"u{i+1}" for i in range(n))


class CurveSingularity:
    """x^p + y^q together with its graded versal deformation."""

    def __init__(self, p: int, q: int, label: Optional[str] = None):
        if p < 2 or q < 2 or gcd(p, q) != 1:
            raise PolyError("need p, q >= 2 with gcd(p, q) = 1")
        self.p = p
        self.q = q
        self.label = label if label is not None else f"x^{p}+y^{q}"
        self.wx = q
        self.wy = p
        self.d = p * q
        self.mu = (p - 1) * (q - 1)
        self.delta = self.mu // 2

        # Milnor-algebra monomials x^i y^j, ordered by increasing parameter
        # weight d - (q*i + p*j); the weights are pairwise distinct.
        monos = [(i, j) for i in range(p - 1) for j in range(q - 1)]
        monos.sort(key=lambda m: self.d - (self.wx * m[0] + self.wy * m[1]))
        top = monos[0]
        if self.d - (self.wx * top[0] + self.wy * top[1]) <= 0:
            raise PolyError(
                "versal deformation has a parameter of non-positive weight; "
                "only singularities with 2(p + q) > p*q are supported")
        self.milnor_monomials = monos
        self.param_names = _param_names(self.mu)
        self.param_weights = tuple(self.d - (self.wx * i + self.wy * j) for i, j in monos)

        self.xy_ring = PolyRing(("x", "y"), (self.wx, self.wy))
        names = ("x", "y") + self.param_names
        weights = (self.wx, self.wy) + self.param_weights
        order = MonomialOrder("block", weights, block=2)
        self.ring = PolyRing(names, weights, order)
        self.base_ring = PolyRing(self.param_names, self.param_weights)

        x, y = self.xy_ring.var("x"), self.xy_ring.var("y")
        self.f = x ** p + y ** q
        X, Y = self.ring.var("x"), self.ring.var("y")
        F = X ** p + Y ** q
        for name, (i, j) in zip(self.param_names, monos):
            F = F + self.ring.var(name) * X ** i * Y ** j
        self.F = F

    def invariants(self) -> dict:
        return {
            "label": self.label,
            "p": self.p,
            "q": self.q,
            "weights": (self.wx, self.wy),
            "degree": self.d,
            "mu": self.mu,
            "delta": self.delta,
            "r": 1,
            "genus": self.delta,
            "param_weights": self.param_weights,
        }

    def milnor_basis(self) -> list:
        """Monomial basis x^i y^j of the Milnor algebra, by parameter weight."""
        x, y = self.xy_ring.var("x"), self.xy_ring.var("y")
        return [x ** i * y ** j for i, j in self.milnor_monomials]

    def versal(self) -> Poly:
        """The miniversal deformation F = f + sum of parameters times basis monomials."""
        return self.F

    def jacobian_gens(self) -> list:
        """F_x and F_y; their leading terms are coprime under the block order,
        so they already form a Groebner basis of the relative Jacobian ideal."""
        return [self.F.partial("x"), self.F.partial("y")]

    def base_poly(self, p: Poly) -> Poly:
        """Reinterpret a polynomial with no x, y as an element of the base ring."""
        terms = {}
        for e, c in p.terms.items():
            if e[0] or e[1]:
                raise PolyError("polynomial still involves x or y")
            terms[e[2:]] = c
        return self.base_ring.poly(terms)

    def lift_base(self, p: Poly) -> Poly:
        """Inverse of base_poly."""
        return self.ring.poly({(0, 0) + e: c for e, c in p.terms.items()})

    def __repr__(self):
        return f"CurveSingularity({self.label}, mu={self.mu})"


def singularity(label: str) -> CurveSingularity:
    key = label.upper()
    if key not in CATALOG:
        raise PolyError(f"unknown catalog label {label!r}; choose from {sorted(CATALOG)}")
    p, q = CATALOG[key]
    return CurveSingularity(p, q, key)


def custom(p: int, q: int) -> CurveSingularity:
    """A singularity outside the catalog; p is the x-exponent."""
    return CurveSingularity(p, q)
