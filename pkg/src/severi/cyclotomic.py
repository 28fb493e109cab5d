"""Arithmetic in cyclotomic fields Q[z]/(Phi_m(z)).

Used only by the period computation, where the leading coefficient zeta of
the branch at infinity satisfies zeta^q = -1; zeta is realised as the class
of z in Q[z]/(Phi_2q), a primitive 2q-th root of unity.
"""

from __future__ import annotations

from functools import lru_cache

from .rationals import QQ, rat, rat_str


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple:
    """Integer coefficient tuple (low degree first) of Phi_m."""
    if m < 1:
        raise ValueError("m must be positive")
    # Phi_m = (z^m - 1) / prod_{d | m, d < m} Phi_d, by exact division.
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _poly_div_exact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _poly_div_exact(num: list, den: list) -> list:
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        if c % den[-1] != 0:
            raise ArithmeticError("inexact cyclotomic division")
        q[i] = c // den[-1]
        for j, d in enumerate(den):
            num[i + j] -= q[i] * d
    if any(num):
        raise ArithmeticError("inexact cyclotomic division")
    return q


class CycloField:
    """The field Q[z]/(Phi_m(z)); elements are Cyclo instances."""

    _cache: dict = {}

    def __new__(cls, m: int):
        if m in cls._cache:
            return cls._cache[m]
        self = super().__new__(cls)
        self.m = m
        phi = cyclotomic_polynomial(m)
        self.degree = len(phi) - 1
        self.modulus = tuple(QQ(c) for c in phi)
        self.zero = Cyclo(self, (QQ(0),) * self.degree)
        self.one = Cyclo(self, (QQ(1),) + (QQ(0),) * (self.degree - 1))
        cls._cache[m] = self
        return self

    def __repr__(self):
        return f"CycloField({self.m})"

    def generator(self) -> "Cyclo":
        """The class of z, a primitive m-th root of unity."""
        if self.degree == 1:
            # Phi_1 = z - 1, Phi_2 = z + 1
            return Cyclo(self, (QQ(1) if self.m == 1 else QQ(-1),))
        return Cyclo(self, (QQ(0), QQ(1)) + (QQ(0),) * (self.degree - 2))

    def scalar(self, q) -> "Cyclo":
        return Cyclo(self, (rat(q),) + (QQ(0),) * (self.degree - 1))

    def from_coeffs(self, coeffs) -> "Cyclo":
        cs = [rat(c) for c in coeffs]
        if len(cs) > self.degree:
            cs = _reduce_mod(cs, self.modulus)
        cs += [QQ(0)] * (self.degree - len(cs))
        return Cyclo(self, tuple(cs))


def _reduce_mod(cs: list, modulus: tuple) -> list:
    cs = list(cs)
    deg = len(modulus) - 1
    for i in range(len(cs) - 1, deg - 1, -1):
        c = cs[i]
        if c:
            for j in range(deg + 1):
                cs[i - deg + j] -= c * modulus[j]
    return cs[:deg]


class Cyclo:
    """Element of a CycloField; immutable, supports field arithmetic."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: CycloField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs
        self._hash = None

    def _coerce(self, other):
        if isinstance(other, Cyclo):
            if other.field is not self.field:
                raise TypeError("mixed cyclotomic fields")
            return other
        return self.field.scalar(other)

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.m, self.coeffs))
        return self._hash

    def __add__(self, other):
        other = self._coerce(other)
        return Cyclo(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        n = self.field.degree
        prod = [QQ(0)] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    prod[i + j] += a * b
        return Cyclo(self.field, tuple(_reduce_mod(prod, self.field.modulus)))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Cyclo":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.scalar(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "Cyclo":
        """Field inverse via the extended Euclidean algorithm over Q[z]."""
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        # Invariants: r0 = s0*self mod Phi, r1 = s1*self mod Phi.
        r0, s0 = list(self.field.modulus), [QQ(0)]
        r1, s1 = list(self.coeffs), [QQ(1)]
        r1 = _trim(r1)
        while len(r1) > 1 or r1[0]:
            q, r = _poly_divmod_q(r0, r1)
            s = _poly_sub(s0, _poly_mul(q, s1))
            r0, s0, r1, s1 = r1, s1, _trim(r), _trim(s)
            if len(r0) == 1:
                break
        lead = r0[0]
        inv = [c / lead for c in s0]
        return self.field.from_coeffs(inv)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError(f"not rational: {self}")
        return self.coeffs[0]

    def __repr__(self):
        if not self:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(rat_str(c))
            else:
                mon = "z" if i == 1 else f"z^{i}"
                parts.append(mon if c == 1 else f"{rat_str(c)}*{mon}")
        return " + ".join(parts)


def _trim(p: list) -> list:
    while len(p) > 1 and not p[-1]:
        p.pop()
    return p


def _poly_divmod_q(num: list, den: list):
    num = list(num)
    if len(num) < len(den):
        return [QQ(0)], num
    q = [QQ(0)] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1] / den[-1]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return q, num


def _poly_mul(a: list, b: list) -> list:
    out = [QQ(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = a + [QQ(0)] * (n - len(a))
    b = b + [QQ(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def root_of_minus_one(q: int) -> Cyclo:
    """A fixed primitive solution of zeta^q = -1: the generator of Q(zeta_2q)."""
    field = CycloField(2 * q)
    return field.generator()
