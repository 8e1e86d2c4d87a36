"""Exact integer matrix and polynomial helpers.

Matrices are tuples of row tuples.  Polynomials are coefficient lists in
ascending degree order, ``[c0, c1, ..., cn]``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Matrix = tuple[tuple[int, ...], ...]


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(n: int) -> Matrix:
    return tuple((0,) * n for _ in range(n))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def matvec(a: Matrix, v) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def matadd(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def matneg(a: Matrix) -> Matrix:
    return tuple(tuple(-x for x in row) for row in a)


def matscale(a: Matrix, c) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def is_zero(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def flatten(a: Matrix) -> tuple:
    return tuple(x for row in a for x in row)


def determinant(a) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in a]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        p = m[col][col]
        det *= p
        for r in range(col + 1, n):
            f = m[r][col] / p
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det


def inverse(a) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse via Gauss-Jordan; raises ZeroDivisionError if singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        m[col], m[pivot] = m[pivot], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def to_int_matrix(a) -> Matrix:
    out = []
    for row in a:
        r = []
        for x in row:
            x = Fraction(x)
            if x.denominator != 1:
                raise ValueError(f"non-integral entry {x}")
            r.append(int(x))
        out.append(tuple(r))
    return tuple(out)


def rank(vectors) -> int:
    """Rank over Q of a list of vectors."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col] / rows[r][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


# -- polynomials -------------------------------------------------------------

def charpoly(a: Matrix) -> list[int]:
    """Characteristic polynomial det(xI - A), Faddeev-LeVerrier, exact."""
    n = len(a)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = zeros(n)
    ident = identity(n)
    for k in range(1, n + 1):
        m = matadd(matmul(a, m), matscale(ident, coeffs[n - k + 1]))
        tr = sum(row[i] for i, row in enumerate(matmul(a, m)))
        if tr % k:
            raise ArithmeticError("Faddeev-LeVerrier produced a non-integer coefficient")
        coeffs[n - k] = -tr // k
    return coeffs


def _trim(p: list[int]) -> list[int]:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def polydivmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Division of integer polynomials by a monic divisor."""
    num, den = _trim(num), _trim(den)
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(num)
    if len(num) < len(den):
        return [0], rem
    quot = [0] * (len(num) - len(den) + 1)
    for shift in range(len(quot) - 1, -1, -1):
        c = rem[shift + len(den) - 1]
        quot[shift] = c
        if c:
            for i, d in enumerate(den):
                rem[shift + i] -= c * d
    return _trim(quot), _trim(rem[: len(den) - 1] or [0])


def cyclotomic(n: int, _cache: dict = {}) -> list[int]:
    """The n-th cyclotomic polynomial, by dividing x^n - 1 by Phi_d for d | n, d < n."""
    if n in _cache:
        return _cache[n]
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p, r = polydivmod(p, cyclotomic(d))
            assert r == [0]
    _cache[n] = p
    return p


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)
