"""Small exact linear-algebra kernel over the rationals.

Matrices are plain lists of rows.  Entries may be ``int`` or ``Fraction``.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

Matrix = list[list]


def zeros(n: int, m: int | None = None) -> Matrix:
    return [[0] * (n if m is None else m) for _ in range(n)]


def identity(n: int) -> Matrix:
    return [[int(a == b) for b in range(n)] for a in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    cols = list(zip(*b)) if b else []
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        out.append([sum((x * col[k] for k, x in nz if col[k]), 0) for col in cols])
    return out


def transpose(a: Matrix) -> Matrix:
    return [list(r) for r in zip(*a)]


def add(a: Matrix, b: Matrix, scale=1) -> Matrix:
    return [[x + scale * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scalar_mul(a: Matrix, s) -> Matrix:
    return [[s * x for x in r] for r in a]


def is_zero(a: Matrix) -> bool:
    return all(not x for r in a for x in r)


def power(a: Matrix, k: int) -> Matrix:
    out = identity(len(a))
    for _ in range(k):
        out = matmul(out, a)
    return out


def _integral_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for r in rows:
        den = 1
        for x in r:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        out.append([int(x * den) for x in r])
    return out


def rank(rows: Sequence[Sequence]) -> int:
    """Rank by fraction-free (Bareiss) elimination."""
    a = [r for r in _integral_rows(rows) if any(r)]
    if not a:
        return 0
    n, m = len(a), len(a[0])
    prev = 1
    r = 0
    for col in range(m):
        piv = next((p for p in range(r, n) if a[p][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for p in range(r + 1, n):
            a[p] = [(a[r][col] * a[p][q] - a[p][col] * a[r][q]) // prev for q in range(m)]
        prev = a[r][col]
        r += 1
        if r == n:
            break
    return r


def rref(rows: Sequence[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    a = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((p for p in range(r, len(a)) if a[p][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for p in range(len(a)):
            if p != r and a[p][col]:
                f = a[p][col]
                a[p] = [x - f * y for x, y in zip(a[p], a[r])]
        pivots.append(col)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : A x = 0}."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def apply(a: Matrix, v: Sequence) -> list:
    return [sum((x * y for x, y in zip(r, v) if x and y), 0) for r in a]


def span_rank(vectors: Sequence[Sequence]) -> int:
    return rank(vectors) if vectors else 0
