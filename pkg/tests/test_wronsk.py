"""Generalized Wronskians against sympy determinants and the symmetric-function identities."""

from __future__ import annotations

from fractions import Fraction

import pytest
import sympy as sp
from conftest import rationals
from hypothesis import given
from hypothesis import strategies as st

from wronski_schubert.errors import DomainError
from wronski_schubert.exactalg import EXPONENTIAL, ORDINARY, Series
from wronski_schubert.odeuniv import MonicOperator, fundamental_basis
from wronski_schubert.partitions import Partition, partitions_of, rect_enumerate, syt_count
from wronski_schubert.schur import delta_of_composition, h_from_e, schur_delta
from wronski_schubert.wronsk import (
    SeriesTuple,
    derivative_expansion_residual,
    derivative_expansion_terms,
    gen_wronskian,
    giambelli_residual,
    liouville_residual,
    multinomial,
    pieri_residual,
    rmk72_coefficient,
    schur_as_ratio,
    weak_compositions,
)

t = sp.Symbol("t")


def sympy_gen_wronskian(lam, funcs):
    r = len(funcs) - 1
    p = list(lam) + [0] * (r + 1 - len(lam))
    M = sp.Matrix(r + 1, r + 1, lambda k, j: sp.diff(funcs[j], t, k + p[r - k]))
    return sp.expand(M.det())


def as_exponential(f, N):
    return Series([sp.diff(f, t, n).subs(t, 0) for n in range(N + 1)], EXPONENTIAL)


poly_tuples = st.integers(0, 2).flatmap(
    lambda r: st.lists(st.lists(rationals, min_size=1, max_size=6), min_size=r + 1, max_size=r + 1)
)


@given(poly_tuples, st.data())
def test_gen_wronskian_matches_sympy(coeff_lists, data):
    r = len(coeff_lists) - 1
    lam = data.draw(st.sampled_from(rect_enumerate(r + 1, 2)))
    funcs = [sum(sp.Rational(c.numerator, c.denominator) * t**i for i, c in enumerate(cs)) for cs in coeff_lists]
    N = 10
    v = [as_exponential(f, N) for f in funcs]
    W = gen_wronskian(lam, v)
    want = sympy_gen_wronskian(lam, funcs)
    assert list(W) == [sp.diff(want, t, n).subs(t, 0) for n in range(W.N + 1)]
    # the ordinary convention gives the same function
    Wo = gen_wronskian(lam, [s.to_ordinary() for s in v])
    assert Wo.to_exponential() == W


def test_exponentials_give_vandermonde():
    a = [1, 2, 5]
    N = 8
    v = [Series([Fraction(x) ** n for n in range(N + 1)], EXPONENTIAL) for x in a]
    W = gen_wronskian((), v)
    vdm = (2 - 1) * (5 - 1) * (5 - 2)
    assert W[0] == vdm
    # W = vdm * exp((1+2+5) t)
    assert list(W) == [vdm * 8**n for n in range(W.N + 1)]


@given(st.integers(0, 2).flatmap(lambda r: st.lists(st.lists(rationals, min_size=9, max_size=9), min_size=r + 1, max_size=r + 1)),
       st.integers(0, 4))
def test_derivative_expansion(coeff_lists, h):
    v = [Series(cs, ORDINARY) for cs in coeff_lists]
    assert not derivative_expansion_residual(v, h)


@pytest.mark.parametrize("h", range(0, 7))
def test_expansion_coefficients_are_syt_counts(h):
    terms = derivative_expansion_terms(h, h)
    assert sum(c * c for _, c in terms) == sp.factorial(h)
    assert all(c == syt_count(lam) for lam, c in terms)


@pytest.mark.parametrize("r", [0, 1, 2])
def test_liouville(r):
    op = MonicOperator.universal(r)
    for k in range(1, r + 2):
        assert not liouville_residual(op, k, 8)


@pytest.mark.parametrize("lam", rect_enumerate(2, 2))
def test_giambelli_r1(lam):
    assert not giambelli_residual(lam, MonicOperator.universal(1), 10)


def test_giambelli_numeric_operator():
    op = MonicOperator([Fraction(3), Fraction(-1, 2), Fraction(2)])
    for lam in rect_enumerate(3, 2):
        assert not giambelli_residual(lam, op, 12)


@pytest.mark.parametrize("i", [1, 2])
def test_pieri_r1(i):
    op = MonicOperator.universal(1)
    for lam in rect_enumerate(2, 2):
        assert not pieri_residual(i, lam, op, 10)


def test_schur_ratio_is_constant():
    op = MonicOperator.universal(1)
    ratio = schur_as_ratio((2, 1), op, 10)
    assert ratio[0] == schur_delta((2, 1), op.h(4), 1)
    assert all(not ratio[n] for n in range(1, ratio.N + 1))


def test_weak_compositions_and_multinomial():
    comps = list(weak_compositions(4, 3))
    assert len(comps) == sp.binomial(6, 2)
    assert sum(multinomial(4, mu) for mu in comps) == 3**4


@pytest.mark.parametrize("r", [1, 2])
def test_rmk72_against_direct_coefficients(r):
    op = MonicOperator.universal(r)
    u = fundamental_basis(op, 8 + r + 3)
    for lam in rect_enumerate(2, 2):
        if len(lam) > r + 1:
            continue
        W = gen_wronskian(lam, u)
        for n in range(0, 5):
            assert rmk72_coefficient(lam, n, r) == W[n]


def test_partition_only_sum_is_not_enough():
    """Restricting the sum to partitions mu drops terms: at lambda = 0, n = 2, r = 1
    the composition (0, 2) contributes -e_2 through a non-partition index vector."""
    r = 1
    op = MonicOperator.universal(r)
    h = op.h(6)
    W = gen_wronskian((), fundamental_basis(op, 8))
    partitions_only = sum(
        (multinomial(2, mu.padded(r + 1)) * schur_delta(mu, h, r) for mu in partitions_of(2, max_parts=r + 1)),
        0 * h[0],
    )
    assert rmk72_coefficient((), 2, r) == W[2]
    assert partitions_only != W[2]
    compositions = (
        delta_of_composition((2, 0), h, r) + 2 * delta_of_composition((1, 1), h, r) + delta_of_composition((0, 2), h, r)
    )
    assert W[2] == compositions
    assert delta_of_composition((0, 2), h, r) != 0


def test_series_tuple_validation():
    with pytest.raises(DomainError):
        SeriesTuple([Series([1, 2]), Series([1, 2, 3])])
    with pytest.raises(DomainError):
        SeriesTuple([Series([1, 2]), Series([1, 2], EXPONENTIAL)])
    with pytest.raises(DomainError):
        gen_wronskian((1, 1, 1), [Series([1, 2, 3, 4]), Series([0, 1, 0, 0])])
    with pytest.raises(DomainError):
        gen_wronskian((5,), [Series([1, 2, 3]), Series([0, 1, 0])])


def test_h_values_in_fundamental_basis():
    op = MonicOperator.universal(2)
    u = fundamental_basis(op, 6)
    h = h_from_e(2, 6)
    assert u[1][3] == h[2]
    assert Partition(()) == Partition((0,))
