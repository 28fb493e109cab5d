"""Exact rational scalars.

gmpy2.mpq is used as the rational type: arbitrary precision, always reduced,
positive denominator, and much faster than fractions.Fraction.
"""

from __future__ import annotations

from fractions import Fraction

from gmpy2 import mpq, mpz

QQ = mpq

ZERO = mpq(0)
ONE = mpq(1)


def rat(value) -> "mpq":
    """Coerce ints, strings like '3/4', Fractions or mpq to mpq."""
    if isinstance(value, type(ONE)):
        return value
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    return mpq(value)


def rat_str(q) -> str:
    """Canonical 'p' or 'p/q' rendering."""
    q = rat(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_integer(q) -> bool:
    return rat(q).denominator == 1


def as_int(q) -> int:
    q = rat(q)
    if q.denominator != 1:
        raise ValueError(f"not an integer: {q}")
    return int(q.numerator)


def gcd_int(a: int, b: int) -> int:
    import math

    return math.gcd(a, b)


def mpz_lcm(a: int, b: int) -> int:
    import math

    return abs(a * b) // math.gcd(a, b) if a and b else 0


__all__ = ["QQ", "ZERO", "ONE", "rat", "rat_str", "is_integer", "as_int", "mpz", "mpq"]
