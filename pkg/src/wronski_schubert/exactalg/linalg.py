"""Exact determinants and row reduction."""

from __future__ import annotations

from fractions import Fraction

from ..errors import DimensionError
from .unipoly import UniPoly

__all__ = ["det", "det_cofactor", "det_bareiss", "rank", "row_echelon", "matmul", "identity"]


def _square(matrix) -> list[list]:
    rows = [list(r) for r in matrix]
    n = len(rows)
    if n == 0:
        raise DimensionError("determinant of an empty matrix")
    for r in rows:
        if len(r) != n:
            raise DimensionError(f"matrix is not square: {n} rows, a row of length {len(r)}")
    return rows


def det(matrix):
    """Exact determinant of a square matrix over a commutative ring.

    Rational and univariate-polynomial matrices use fraction-free Bareiss
    elimination.  Everything else (multivariate polynomials, power series,
    number-field elements) goes through cofactor expansion with memoization on
    the set of columns still available, which needs no division at all.
    """
    rows = _square(matrix)
    kinds = {type(x) for r in rows for x in r}
    if kinds <= {int, Fraction}:
        return det_bareiss([[Fraction(x) for x in r] for r in rows])
    if kinds <= {int, Fraction, UniPoly} and all(
        isinstance(c, Fraction) for r in rows for x in r if isinstance(x, UniPoly) for c in x.coeffs
    ):
        return det_bareiss([[x if isinstance(x, UniPoly) else UniPoly((x,)) for x in r] for r in rows])
    return det_cofactor(rows)


def det_cofactor(matrix):
    rows = _square(matrix)
    n = len(rows)
    memo: dict[tuple[int, int], object] = {}

    def minor(k: int, mask: int):
        # determinant of rows k.. restricted to the columns set in ``mask``
        if k == n:
            return 1
        key = (k, mask)
        if key in memo:
            return memo[key]
        total = 0
        sign = 1
        for c in range(n):
            if not mask >> c & 1:
                continue
            entry = rows[k][c]
            if entry:
                sub = minor(k + 1, mask & ~(1 << c))
                if sub:
                    term = entry * sub
                    total = total + term if sign > 0 else total - term
            sign = -sign
        memo[key] = total
        return total

    return minor(0, (1 << n) - 1)


def det_bareiss(matrix):
    rows = _square(matrix)
    n = len(rows)
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return a[k][k] * 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                if isinstance(num, UniPoly) and isinstance(prev, UniPoly):
                    a[i][j] = num.exact_div(prev)
                else:
                    a[i][j] = num / prev
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def row_echelon(matrix, pivot_order=None):
    """Reduced row echelon form over a field.

    ``pivot_order`` lists the column indices in the order in which pivots are
    sought (default left to right).  Returns ``(rows, pivots)`` with one pivot
    column per nonzero row, pivots normalized to 1.
    """
    a = [list(r) for r in matrix]
    if not a:
        return [], []
    ncols = len(a[0])
    order = list(range(ncols)) if pivot_order is None else list(pivot_order)
    pivots: list[int] = []
    r = 0
    for c in order:
        if r == len(a):
            break
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c] if not isinstance(a[r][c], int) else Fraction(1, a[r][c])
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(matrix) -> int:
    return len(row_echelon(matrix)[1])


def matmul(a, b):
    return [[sum((x * y for x, y in zip(row, col)), 0) for col in zip(*b)] for row in a]


def identity(n: int):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
