"""Resultants and discriminants of univariate polynomials."""

from __future__ import annotations

from fractions import Fraction

from ..errors import DomainError
from .linalg import det
from .unipoly import UniPoly

__all__ = ["sylvester_matrix", "resultant", "discriminant"]


def sylvester_matrix(f: UniPoly, g: UniPoly) -> list[list]:
    """Sylvester matrix with ``deg g`` rows of ``f`` above ``deg f`` rows of ``g``."""
    m, n = f.degree, g.degree
    size = m + n
    zero = Fraction(0)
    fr = list(reversed(f.coeffs))
    gr = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([zero] * i + fr + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gr + [zero] * (size - n - 1 - i))
    return rows


def resultant(f: UniPoly, g: UniPoly):
    """``Res(f, g) = lc(f)**deg(g) * prod g(root)`` over the roots of ``f``.

    Constants follow the Sylvester convention ``Res(c, g) = c**deg(g)``.
    """
    if not f or not g:
        raise DomainError("resultant with the zero polynomial is undefined")
    m, n = f.degree, g.degree
    if m == 0:
        return f.lc**n if n else Fraction(1)
    if n == 0:
        return g.lc**m
    return det(sylvester_matrix(f, g))


def discriminant(f: UniPoly):
    """``(-1)**(n(n-1)/2) * Res(f, f') / lc(f)``; equals 1 in degree one."""
    n = f.degree
    if n < 1:
        raise DomainError("discriminant needs a polynomial of degree at least 1")
    if n == 1:
        return Fraction(1)
    res = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    lead = f.lc
    value = res if lead == 1 else res / lead
    return value if sign > 0 else -value
