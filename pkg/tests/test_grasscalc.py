"""Schubert calculus in the wedge model against Schur polynomial products."""

from __future__ import annotations

from functools import lru_cache

import pytest
import sympy as sp
from conftest import partitions_in
from hypothesis import given
from hypothesis import strategies as st

from wronski_schubert.errors import DomainError
from wronski_schubert.grasscalc import (
    IntersectionWeightWarning,
    class_of,
    h_act,
    intersection_number,
    multiply,
    plucker_degree,
)
from wronski_schubert.partitions import Partition, complement, pieri_strips, rect_enumerate, syt_count


@lru_cache(maxsize=None)
def schur_poly(lam: tuple, n: int):
    xs = sp.symbols(f"x0:{n}")
    p = list(lam) + [0] * (n - len(lam))
    num = sp.Matrix(n, n, lambda i, j: xs[i] ** (p[j] + n - 1 - j)).det()
    den = sp.Matrix(n, n, lambda i, j: xs[i] ** (n - 1 - j)).det()
    return sp.Poly(sp.cancel(num / den), *xs)


def schur_expand(poly: sp.Poly, n: int) -> dict:
    """Peel off leading lex monomials; each one is the top term of a Schur polynomial."""
    out = {}
    while not poly.is_zero:
        mono, coeff = poly.terms(order="lex")[0]
        lam = Partition(mono)
        out[lam] = coeff
        poly = poly - schur_poly(tuple(lam), n) * coeff
    return out


def oracle_product(a, b, r: int, d: int) -> dict:
    n = r + 1
    full = schur_expand(schur_poly(tuple(a), n) * schur_poly(tuple(b), n), n)
    return {lam: c for lam, c in full.items() if lam.fits(r + 1, d - r) and c}


@pytest.mark.parametrize("r,d", [(1, 3), (1, 4), (2, 4), (2, 5)])
def test_products_match_schur_polynomials(r, d):
    lams = rect_enumerate(r + 1, d - r)
    for a in lams:
        for b in lams:
            got = {lam: c for lam, c in multiply(class_of(a, r, d), class_of(b, r, d)).by_partition().items() if c}
            assert got == oracle_product(a, b, r, d), (a, b)


@given(partitions_in(3, 3), st.integers(1, 4))
def test_h_action_is_pieri(lam, i):
    r, d = 2, 5
    got = h_act(i, class_of(lam, r, d)).by_partition()
    want = {mu: 1 for mu in pieri_strips(lam, i, rect=(r + 1, d - r))}
    assert {m: c for m, c in got.items() if c} == want


@pytest.mark.parametrize("r", range(0, 4))
@pytest.mark.parametrize("d", range(0, 8))
def test_plucker_degree_is_rectangle_syt_count(r, d):
    if d < r:
        with pytest.raises(DomainError):
            plucker_degree(r, d)
        return
    assert plucker_degree(r, d) == syt_count(Partition([d - r] * (r + 1)))


def test_known_values():
    assert plucker_degree(1, 3) == 2
    assert plucker_degree(2, 4) == 5
    assert intersection_number([(1,)] * 4, 1, 3) == 2
    assert str(multiply(class_of((1,), 1, 3), class_of((1,), 1, 3))) == "s(2) + s(1,1)"
    assert class_of((1,), 1, 3) * class_of((1,), 1, 3) == multiply(class_of((1,), 1, 3), class_of((1,), 1, 3))


@pytest.mark.parametrize("rows,cols", [(1, 4), (2, 2), (2, 3), (3, 3)])
def test_duality(rows, cols):
    r, d = rows - 1, rows - 1 + cols
    lams = rect_enumerate(rows, cols)
    for a in lams:
        for b in lams:
            if a.weight + b.weight != rows * cols:
                continue
            want = 1 if b == complement(a, (rows, cols)) else 0
            assert intersection_number([a, b], r, d) == want


def test_weight_mismatch_warns_and_gives_zero():
    with pytest.warns(IntersectionWeightWarning):
        assert intersection_number([(1,), (1,)], 1, 3) == 0


def test_class_must_fit():
    with pytest.raises(DomainError):
        class_of((3,), 1, 3)
