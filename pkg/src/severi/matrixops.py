"""Small exact matrix helpers for polynomial and scalar matrices."""

from __future__ import annotations

from .rationals import QQ
from .ring import Poly, PolyRing


def det(mat: list) -> Poly:
    """Determinant of a square matrix of Poly, by minor expansion.

    Memoizes on (row offset, active column subset), which keeps the work at
    O(2^n) polynomial additions; matrices here are at most mu x mu.
    """
    n = len(mat)
    if n == 0:
        raise ValueError("empty matrix")
    ring = mat[0][0].ring
    cache: dict = {}

    def minor(r: int, cols: int) -> Poly:
        if cols == 0:
            return ring.one
        key = (r, cols)
        hit = cache.get(key)
        if hit is not None:
            return hit
        acc = ring.zero
        sign = 1
        rest = cols
        while rest:
            c = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            entry = mat[r][c]
            if not entry.is_zero():
                term = entry * minor(r + 1, cols & ~(1 << c))
                acc = acc + term if sign > 0 else acc - term
            sign = -sign
        cache[key] = acc
        return acc

    return minor(0, (1 << n) - 1)


def adjugate(mat: list) -> list:
    """Classical adjugate: adj[i][j] = (-1)^(i+j) * minor with row j, col i removed."""
    n = len(mat)
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sub = [
                [mat[r][c] for c in range(n) if c != i]
                for r in range(n)
                if r != j
            ]
            m = det(sub) if sub else mat[0][0].ring.one
            out[i][j] = m if (i + j) % 2 == 0 else -m
    return out


def scalar_rank(mat: list) -> int:
    """Rank of a matrix with entries coercible to QQ, by Gaussian elimination."""
    rows = [[QQ(x) for x in row] for row in mat]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                f = rows[r][col] / pv
                for c in range(col, ncols):
                    rows[r][c] -= f * rows[rank][c]
        rank += 1
    return rank


def mat_mul(a: list, b: list) -> list:
    ring = a[0][0].ring
    return [
        [sum((a[i][k] * b[k][j] for k in range(len(b))), ring.zero) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def transpose(mat: list) -> list:
    return [list(row) for row in zip(*mat)]


def is_symmetric(mat: list) -> bool:
    n = len(mat)
    return all(mat[i][j] == mat[j][i] for i in range(n) for j in range(i + 1, n))


def is_skew(mat: list) -> bool:
    n = len(mat)
    return all((mat[i][j] + mat[j][i]).is_zero() for i in range(n) for j in range(i, n))
