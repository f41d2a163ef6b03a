"""The universal Cauchy solver against recurrences and sympy's ODE solver."""

from __future__ import annotations

from fractions import Fraction

import pytest
import sympy as sp
from conftest import rationals
from hypothesis import given
from hypothesis import strategies as st

from wronski_schubert.errors import DomainError
from wronski_schubert.exactalg import EXPONENTIAL, ORDINARY, Series
from wronski_schubert.odeuniv import (
    CauchyData,
    MonicOperator,
    apply_operator,
    fundamental_basis,
    fundamental_initial_data,
    recurrence_solution,
    solve_cauchy,
    specialize_series,
    universal_cauchy,
)


def naive_recurrence(e, init, forcing, N):
    """D^{r+1} y = sum_k (-1)^{k+1} e_k D^{r+1-k} y + phi, coefficient by coefficient."""
    p = list(init)
    order = len(e)
    while len(p) <= N:
        m = len(p) - order
        acc = forcing[m] if forcing else Fraction(0)
        for k in range(1, order + 1):
            acc += (-1) ** (k + 1) * e[k - 1] * p[-k]
        p.append(acc)
    return p


instances = st.integers(0, 3).flatmap(
    lambda r: st.tuples(
        st.lists(rationals, min_size=r + 1, max_size=r + 1),
        st.lists(rationals, min_size=r + 1, max_size=r + 1),
        st.one_of(st.none(), st.lists(rationals, min_size=16, max_size=16)),
    )
)


@given(instances)
def test_solver_matches_naive_recurrence(inst):
    e, init, forcing = inst
    op = MonicOperator(e)
    phi = Series(forcing, EXPONENTIAL) if forcing else None
    got = solve_cauchy(CauchyData(op, init, phi, 16))
    assert list(got) == naive_recurrence(e, init, forcing, 16)
    assert got == recurrence_solution(CauchyData(op, init, phi, 16))


@given(instances)
def test_solution_satisfies_the_equation(inst):
    e, init, forcing = inst
    op = MonicOperator(e)
    phi = Series(forcing, EXPONENTIAL) if forcing else None
    y = solve_cauchy(CauchyData(op, init, phi, 16))
    residual = apply_operator(op, y)
    want = phi.truncate(residual.N) if phi else Series.zero(residual.N, EXPONENTIAL)
    assert residual == want
    assert [y[i] for i in range(op.order)] == list(init)


@pytest.mark.parametrize(
    "e,init,expr",
    [
        ([2], [1], "exp(2*t)"),
        ([0, -1], [1, 0], "cosh(t)"),
        ([3, 2], [1, 0], "2*exp(t) - exp(2*t)"),
        ([0, 0], [5, -3], "5 - 3*t"),
        ([0, 0, 0], [1, 2, 3], "1 + 2*t + 3*t**2/2"),
    ],
)
def test_closed_forms(e, init, expr):
    t = sp.Symbol("t")
    f = sp.sympify(expr)
    y = solve_cauchy(CauchyData(MonicOperator(e), init, None, 12))
    want = [sp.diff(f, t, n).subs(t, 0) for n in range(13)]
    assert list(y) == want


def test_closed_form_from_sympy_dsolve():
    t = sp.Symbol("t")
    f = sp.Function("f")
    ode = sp.Eq(f(t).diff(t, 3) - 2 * f(t).diff(t, 2) - f(t).diff(t) + 2 * f(t), 0)
    sol = sp.dsolve(ode, ics={f(0): 1, f(t).diff(t).subs(t, 0): 0, f(t).diff(t, 2).subs(t, 0): 4}).rhs
    # P(T) = T^3 - 2T^2 - T + 2, so e_1 = 2, e_2 = -1, e_3 = -2
    y = solve_cauchy(CauchyData(MonicOperator([2, -1, -2]), [1, 0, 4], None, 10))
    assert list(y) == [sp.simplify(sp.diff(sol, t, n).subs(t, 0)) for n in range(11)]


@pytest.mark.parametrize("r", [0, 1, 2])
def test_universal_solver_specializes(r):
    data = universal_cauchy(r, 8)
    p = solve_cauchy(data)
    assert p == recurrence_solution(data)
    values = {f"e_{k}": Fraction(k, 2) for k in range(1, r + 2)}
    values.update({f"x_{i}": Fraction(i + 1) for i in range(r + 1)})
    values.update({f"f_{m}": Fraction(m - 1, 3) for m in range(8 - r)})
    e = [values[f"e_{k}"] for k in range(1, r + 2)]
    init = [values[f"x_{i}"] for i in range(r + 1)]
    forcing = [values[f"f_{m}"] for m in range(8 - r)]
    assert list(specialize_series(p, values)) == naive_recurrence(e, init, forcing, 8)


@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_fundamental_basis(r):
    op = MonicOperator.universal(r)
    u = fundamental_basis(op, 8)
    h = op.h(8)
    for i, ui in enumerate(u):
        assert [ui[n] for n in range(8 + 1)] == [h[n - i] for n in range(9)]
        assert not apply_operator(op, ui)
        data = CauchyData(op, fundamental_initial_data(op, i), None, 8)
        assert solve_cauchy(data) == ui


def test_validation():
    op = MonicOperator([1, 2])
    with pytest.raises(DomainError):
        CauchyData(op, [1], None, 8)
    with pytest.raises(DomainError):
        CauchyData(op, [1, 2], Series([1, 2], ORDINARY), 8)
    with pytest.raises(DomainError):
        CauchyData(op, [1, 2], Series([1, 2], EXPONENTIAL), 8)
    with pytest.raises(TypeError):
        MonicOperator([0.5])
