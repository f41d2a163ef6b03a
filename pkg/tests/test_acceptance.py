"""Acceptance criteria, one test per criterion.

Each test tags itself through the ``criterion`` fixture; the terminal summary
prints one PASS/FAIL line per criterion at the end of the run.
"""

from __future__ import annotations

import random
import time
import warnings
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

import numpy as np
import pytest
import sympy as sp
from conftest import random_rational, random_system
from test_odeuniv import naive_recurrence

from wronski_schubert.exactalg import EXPONENTIAL, ORDINARY, Series, UniPoly
from wronski_schubert.grasscalc import intersection_number, plucker_degree
from wronski_schubert.odeuniv import CauchyData, MonicOperator, fundamental_basis, solve_cauchy
from wronski_schubert.partitions import complement, hooks, rect_enumerate, syt_count
from wronski_schubert.wmap import (
    INFINITY,
    DegreeFormulaWarning,
    RamificationConfig,
    annihilator_residual,
    critical_residual,
    find_planes_r1,
    intermediate_wronskians,
    nondegenerate,
    planes_d3_oracle,
    ramification_profile,
    reconstruct_basis_series,
    span_check,
    t_polys,
    wronskian_of_system,
)
from wronski_schubert.wronsk import (
    derivative_expansion_residual,
    derivative_expansion_terms,
    gen_wronskian,
    giambelli_residual,
    liouville_residual,
    pieri_residual,
    rmk72_coefficient,
)

pytestmark = pytest.mark.acceptance

x = sp.Symbol("x")


def test_criterion_01_plucker_degree(criterion):
    criterion(1, "Plucker degree equals the sigma_1-power intersection number")
    start = time.perf_counter()
    for r in range(0, 4):
        for d in range(r, 10):
            power = (r + 1) * (d - r)
            assert plucker_degree(r, d) == intersection_number([(1,)] * power, r, d), (r, d)
    assert plucker_degree(1, 3) == 2 and plucker_degree(2, 4) == 5
    assert time.perf_counter() - start < 10


def test_criterion_02_giambelli(criterion):
    criterion(2, "Giambelli residual vanishes on the 3x3 rectangle, r = 2")
    start = time.perf_counter()
    op = MonicOperator.universal(2)
    for lam in rect_enumerate(3, 3):
        assert not giambelli_residual(lam, op, 12), lam
    assert time.perf_counter() - start < 30


def test_criterion_03_pieri(criterion):
    criterion(3, "Pieri residual vanishes for i <= 3 on the 3x3 rectangle, r = 2")
    op = MonicOperator.universal(2)
    for i in range(1, 4):
        for lam in rect_enumerate(3, 3):
            assert not pieri_residual(i, lam, op, 12), (i, lam)


def test_criterion_04_syt_expansion(criterion):
    criterion(4, "derivative expansion with SYT coefficients on 50 random tuples")
    rng = random.Random(4)
    for _ in range(50):
        r = rng.randint(0, 3)
        v = [Series([random_rational(rng) for _ in range(12)], ORDINARY) for _ in range(r + 1)]
        for h in range(0, 6):
            assert not derivative_expansion_residual(v, h), (r, h)
    for h in range(0, 7):
        terms = derivative_expansion_terms(h, h)
        for lam, c in terms:
            hook_count = factorial(h) // prod(hooks(lam))
            assert c == hook_count == syt_count(lam) == _syt_by_corners(tuple(lam))
        assert sum(c * c for _, c in terms) == factorial(h)


@lru_cache(maxsize=None)
def _syt_by_corners(lam: tuple) -> int:
    """Count tableaux by removing the box holding the largest entry (a corner)."""
    lam = tuple(p for p in lam if p)
    if not lam:
        return 1
    total = 0
    for i, part in enumerate(lam):
        if i + 1 == len(lam) or lam[i + 1] < part:
            total += _syt_by_corners(lam[:i] + (part - 1,) + lam[i + 1 :])
    return total


def test_criterion_05_liouville(criterion):
    criterion(5, "generalized Liouville residual vanishes for 1 <= k <= r+1 <= 4")
    for r in range(0, 4):
        op = MonicOperator.universal(r)
        for k in range(1, r + 2):
            assert not liouville_residual(op, k, 10), (r, k)


def test_criterion_06_rmk72(criterion):
    criterion(6, "composition-sum formula matches the Wronskian coefficients, n <= 8")
    for r in (1, 2):
        op = MonicOperator.universal(r)
        u = fundamental_basis(op, 8 + r + 3)
        for lam in rect_enumerate(2, 2):
            W = gen_wronskian(lam, u).to_exponential()
            for n in range(0, 9):
                assert rmk72_coefficient(lam, n, r) == W[n], (r, lam, n)


def test_criterion_07_cauchy_solver(criterion):
    criterion(7, "Cauchy solver matches the recurrence on 100 instances and closed forms")
    rng = random.Random(7)
    for i in range(100):
        r = rng.randint(0, 3)
        e = [random_rational(rng) for _ in range(r + 1)]
        init = [random_rational(rng) for _ in range(r + 1)]
        forcing = [random_rational(rng) for _ in range(17)] if i % 2 else None
        phi = Series(forcing, EXPONENTIAL) if forcing else None
        got = solve_cauchy(CauchyData(MonicOperator(e), init, phi, 16))
        assert list(got) == naive_recurrence(e, init, forcing, 16)
    t = sp.Symbol("t")
    for e, init, f in [([2], [1], sp.exp(2 * t)), ([0, -1], [1, 0], sp.cosh(t)), ([0, 0, 0], [1, 2, 3], 1 + 2 * t + 3 * t**2 / 2)]:
        y = solve_cauchy(CauchyData(MonicOperator(e), init, None, 16))
        assert list(y) == [sp.diff(f, t, n).subs(t, 0) for n in range(17)]


@lru_cache(maxsize=None)
def _two_hundred_systems():
    """200 systems in each of G(2, Poly_4) and G(3, Poly_5), with sympy's Wronskian and profile."""
    rng = random.Random(8)
    out = []
    for r, d in ((1, 4), (2, 5)):
        for _ in range(200):
            V = random_system(rng, r, d)
            out.append((V, _sympy_wronskian(V), ramification_profile(V)))
    return tuple(out)


def _sympy_wronskian(V):
    fs = [sum(sp.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(b.coeffs)) for b in V.basis]
    return sp.Poly(sp.wronskian(fs, x), x)


def test_criterion_08_brill_segre(criterion):
    criterion(8, "total ramification weight is (r+1)(d-r) on 200 systems each in G(2,Poly_4), G(3,Poly_5)")
    for V, W, prof in _two_hundred_systems():
        rational = sum(p.weight for p in prof.points if p.point is not INFINITY)
        at_infinity = sum(p.weight for p in prof.points if p.point is INFINITY)
        # the irrational remainder is whatever sympy's Wronskian has beyond the rational roots
        rational_roots = sum(m for z, m in sp.roots(W, filter="Q").items())
        assert rational == rational_roots
        assert prof.irrational_degree == W.degree() - rational_roots
        assert rational + at_infinity + prof.irrational_degree == (V.r + 1) * (V.d - V.r)


def test_criterion_09_potow(criterion):
    criterion(9, "ord_P W equals |lambda(V, P)| at every rational ramification point")
    for V, W, prof in _two_hundred_systems():
        roots = sp.roots(W, filter="Q")
        for datum in prof.points:
            if datum.point is INFINITY:
                assert datum.weight == (V.r + 1) * (V.d - V.r) - W.degree()
            else:
                P = sp.Rational(datum.point.numerator, datum.point.denominator)
                assert datum.weight == roots.get(P, 0)


def _criterion_10_targets():
    """Twenty targets with four distinct rational roots drawn from a broad distribution."""
    rng = random.Random(10)
    targets = []
    while len(targets) < 20:
        roots = {Fraction(rng.randint(-40, 40), rng.randint(1, 7)) for _ in range(4)}
        if len(roots) == 4:
            targets.append(sorted(roots))
    return targets


def test_criterion_10_preimages(criterion):
    criterion(10, "find_planes_r1 returns the 2 planes of the elimination oracle, < 1 s per target")
    for roots in _criterion_10_targets():
        start = time.perf_counter()
        planes = find_planes_r1(roots, 3)
        assert time.perf_counter() - start < 1.0
        target = UniPoly.from_roots(roots)
        quad, p, s2, b = planes_d3_oracle(roots)[0]
        assert len(planes) == 2
        qs = set()
        for V in planes:
            assert wronskian_of_system(V).monic() == target
            w0, w1 = sorted(V.canonical_basis(), key=lambda f: f.degree)
            assert w0.degree == 2 and w0[1] == p and not quad(w0[0])
            assert w1[1] == 3 * w0[0] - s2 and w1[0] == b
            qs.add(w0[0])
        assert len(qs) == 2


def test_criterion_11_duality(criterion):
    criterion(11, "intersection_number({lambda, complement}) = 1 up to 3x4")
    for rows in range(1, 4):
        for cols in range(1, 5):
            r, d = rows - 1, rows - 1 + cols
            for lam in rect_enumerate(rows, cols):
                assert intersection_number([lam, complement(lam, (rows, cols))], r, d) == 1


def test_criterion_12_reconstruction(criterion):
    criterion(12, "reconstructed basis is annihilated by E_V and spans V, 50 systems, N = 14")
    rng = random.Random(12)
    for _ in range(50):
        r = rng.randint(0, 2)
        V = random_system(rng, r, r + rng.randint(1, 3))
        flag = intermediate_wronskians(V)
        a = next(Fraction(k, 3) for k in range(1, 300) if all(W(Fraction(k, 3)) for W in flag.wronskians))
        g = reconstruct_basis_series(flag, a, 14)
        for s in g:
            residual = annihilator_residual(V, s, at=a)
            assert residual.N == 14 - (r + 1) and not residual
        assert span_check(V, g, a) == (r + 1, r + 1)


def test_criterion_13_critical_points(criterion):
    criterion(13, "planes of criterion 10 are non-degenerate critical points of the master function")
    for roots in _criterion_10_targets():
        for V in find_planes_r1(roots, 3):
            config = RamificationConfig.of_system(V)
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", DegreeFormulaWarning)
                T1 = t_polys(V, config).t[1]
                assert nondegenerate(V, config).ok
            extra = np.roots([complex(c) for c in reversed(T1.coeffs)])
            assert np.linalg.norm(critical_residual(config, extra)) < 1e-9
