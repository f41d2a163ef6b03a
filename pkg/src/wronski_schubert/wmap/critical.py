"""Critical points of the master function for r = 1 and preimages of the Wronski map.

For ``r = 1`` and partitions ``lambda_j`` at finite points, the full master
function is ``Delta(T_1) Res(Z_0, T_1)^2 / Res(T_1, Z_1)``.  Its logarithmic
gradient in the roots ``t_a`` of ``T_1`` is

    sum_{b != a} 2 / (t_a - t_b) - sum_j m_j / (t_a - z_j),   m_j = lambda_{j,0} - lambda_{j,1},

so critical points are solutions of the Bethe equations; :func:`critical_residual`
evaluates them.

Preimages of the Wronski map are searched in Schubert-cell coordinates rather
than through the Bethe equations: ``w_0`` is monic of degree ``d_0`` and ``w_1``
is monic of degree ``d`` with no ``x^{d_0}`` term, and the unknown coefficients
must make ``w_0 w_1' - w_0' w_1`` equal to ``(d - d_0)`` times the monic target.
This square polynomial system has only simple solutions over a target with
distinct roots, including planes whose ``w_0`` vanishes at a root of the target,
which the Bethe form cannot see.

The search runs float64 Newton from many starts, then, if fewer solutions than
the Schubert-calculus count were found, tracks all known solutions around
random loops in target space (monodromy) until the count is reached.  Distinct
solutions are polished with mpmath, grouped into Galois orbits by detecting
rational symmetric functions, and rebuilt exactly over a number field.  Only
planes whose exact Wronskian equals the target are returned.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np
from numpy.polynomial import polynomial as P

from ..errors import DegenerateConfigurationError, DomainError
from ..exactalg import NumberField, UniPoly, row_echelon
from ..grasscalc import plucker_degree
from .flag import RamificationConfig
from .system import LinearSystemP1, wronskian_of_system

__all__ = [
    "critical_residual",
    "find_planes_r1",
    "find_planes_r1_report",
    "PlaneSearchReport",
    "planes_d3_oracle",
]

NEWTON_TOL = 1e-10
NEWTON_MAX_ITER = 100


def _weights(config: RamificationConfig) -> np.ndarray:
    ws = []
    for lam in config.partitions:
        p = lam.padded(2)
        ws.append(p[0] - p[1])
    return np.array(ws, dtype=float)


def critical_residual(config: RamificationConfig, roots) -> np.ndarray:
    """Logarithmic gradient of the full master function at the roots of ``T_1`` (r = 1).

    Returns a complex array; its norm vanishes exactly at critical points.
    """
    if any(len(lam) > 2 for lam in config.partitions):
        raise DomainError("critical_residual is implemented for r = 1 (partitions with at most 2 parts)")
    if not config.points:
        raise DomainError("at least one finite ramification point is required")
    t = np.asarray([complex(x) for x in roots], dtype=complex)
    z = np.asarray([float(p) for p in config.points], dtype=complex)
    m = _weights(config)
    return _bethe(t, z, m)


def _bethe(t: np.ndarray, z: np.ndarray, m: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    n = len(t)
    if n == 0:
        return np.zeros(0, dtype=complex)
    dt = t[:, None] - t[None, :]
    dz = t[:, None] - z[None, :]
    scale = 1.0 + np.max(np.abs(t))
    off = ~np.eye(n, dtype=bool)
    if np.any(np.abs(dt[off]) < tol * scale) or np.any(np.abs(dz) < tol * scale):
        raise DegenerateConfigurationError("roots collide with each other or with a ramification point")
    inv = np.zeros_like(dt)
    inv[off] = 1.0 / dt[off]
    return 2.0 * inv.sum(axis=1) - (m[None, :] / dz).sum(axis=1)


# Polynomials below are ascending coefficient lists, so the same code runs on
# complex floats during the search and on mpmath numbers during polishing.


def _pmul(a, b):
    out = [0 * a[0]] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _pder(a):
    return [i * a[i] for i in range(1, len(a))] or [0 * a[0]]


def _psub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0 * a[0]] * (n - len(a))
    b = list(b) + [0 * b[0]] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _split(u, d0, d, one):
    """Unknown vector -> (w_0, w_1) coefficient lists in Schubert-cell coordinates."""
    w0 = list(u[:d0]) + [one]
    rest = iter(u[d0:])
    w1 = [0 * one if k == d0 else next(rest) for k in range(d)] + [one]
    return w0, w1


def _wronski_system(u, rhs, d0, d, one):
    """Residual ``W(w_0, w_1) - rhs`` below the leading term, and its Jacobian.

    ``w_0`` is monic of degree ``d0`` and ``w_1`` monic of degree ``d`` without an
    ``x^{d0}`` term; these are coordinates on the Schubert cell, so every plane
    in the fiber appears exactly once, and a reduced fiber point is a simple
    zero.  ``W`` is bilinear, so the Jacobian columns are Wronskians with
    monomials.
    """
    n = d0 + d - 1
    w0, w1 = _split(u, d0, d, one)

    def wr(a, b):
        return _psub(_pmul(a, _pder(b)), _pmul(_pder(a), b))

    def low(p):
        p = list(p) + [0 * one] * (n - len(p))
        return p[:n]

    F = [a - b for a, b in zip(low(wr(w0, w1)), rhs)]
    cols = []
    for k in range(d0):
        cols.append(low(wr([0 * one] * k + [one], w1)))
    for k in range(d):
        if k != d0:
            cols.append(low(wr(w0, [0 * one] * k + [one])))
    return F, [[cols[j][i] for j in range(n)] for i in range(n)]


def _der_np(a: np.ndarray) -> np.ndarray:
    return a[1:] * np.arange(1, len(a)) if len(a) > 1 else np.zeros(1, dtype=complex)


def _wr_np(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return P.polysub(np.convolve(a, _der_np(b)), np.convolve(_der_np(a), b))


def _system_np(u: np.ndarray, rhs: np.ndarray, d0: int, d: int):
    """Float version of :func:`_wronski_system` on numpy arrays (used by the search)."""
    n = d0 + d - 1
    w0 = np.concatenate([u[:d0], [1.0]])
    w1 = np.zeros(d + 1, dtype=complex)
    w1[[k for k in range(d) if k != d0]] = u[d0:]
    w1[d] = 1.0

    def low(p):
        out = np.zeros(n, dtype=complex)
        m = min(n, len(p))
        out[:m] = p[:m]
        return out

    F = low(_wr_np(w0, w1)) - rhs
    J = np.empty((n, n), dtype=complex)
    col = 0
    for k in range(d0):
        e = np.zeros(k + 1, dtype=complex)
        e[k] = 1.0
        J[:, col] = low(_wr_np(e, w1))
        col += 1
    for k in range(d):
        if k != d0:
            e = np.zeros(k + 1, dtype=complex)
            e[k] = 1.0
            J[:, col] = low(_wr_np(w0, e))
            col += 1
    return F, J


def _initial_w1(c0, rhs, d0, d):
    """Least-squares ``w_1`` for a trial ``w_0``: the residual is linear in ``w_1``."""
    u = np.concatenate([np.asarray(c0, dtype=complex), np.zeros(d - 1, dtype=complex)])
    F, J = _system_np(u, rhs, d0, d)
    u[d0:] = np.linalg.lstsq(J[:, d0:], -F, rcond=None)[0]
    return u


def _newton(u0, rhs, d0, d, max_iter: int = NEWTON_MAX_ITER):
    """Float Newton on the Wronski system; returns the unknown vector or None."""
    u = np.array(u0, dtype=complex)
    scale = 1 + np.linalg.norm(rhs)
    for _ in range(max_iter):
        F, J = _system_np(u, rhs, d0, d)
        if not np.all(np.isfinite(F)):
            return None
        if np.linalg.norm(F) < NEWTON_TOL * scale:
            return u
        try:
            u = u + np.linalg.solve(J, -F)
        except np.linalg.LinAlgError:
            return None
        if not np.all(np.isfinite(u)) or np.max(np.abs(u)) > 1e12:
            return None
    return None


def _track(u, a: np.ndarray, b: np.ndarray, d0: int, d: int):
    """Follow a solution while the right-hand side moves linearly from ``a`` to ``b``.

    Euler predictor (``du/ds = J^{-1} (b - a)``) with a Newton corrector and
    adaptive steps; returns the endpoint or None if the path is lost.
    """
    s, h = 0.0, 0.05
    u = np.array(u, dtype=complex)
    delta = b - a
    scale = 1 + max(np.linalg.norm(a), np.linalg.norm(b))
    while s < 1.0:
        h = min(h, 1.0 - s)
        try:
            _, J = _system_np(u, a + s * delta, d0, d)
            v = u + h * np.linalg.solve(J, delta)
            target = a + (s + h) * delta
            ok = False
            for _ in range(4):
                F, J = _system_np(v, target, d0, d)
                v = v + np.linalg.solve(J, -F)
                if np.linalg.norm(F) < 1e-9 * scale:
                    ok = True
                    break
        except np.linalg.LinAlgError:
            ok = False
        if ok and np.linalg.norm(v - u) < 0.5 * (1 + np.linalg.norm(u)):
            u, s = v, s + h
            h *= 1.6
        else:
            h *= 0.5
            if h < 1e-9:
                return None
    return _newton(u, b, d0, d, max_iter=10)


def _monodromy(found: list, rhs: np.ndarray, d0: int, d: int, expected: int, loops: int, rng) -> int:
    """Grow ``found`` by tracking all known solutions around random loops in target space."""
    used = 0
    size = 1 + np.linalg.norm(rhs)
    while len(found) < expected and used < loops and found:
        used += 1
        p1 = rhs + size * np.array([complex(rng.gauss(0, 0.3), rng.gauss(0, 0.3)) for _ in rhs])
        p2 = rhs + size * np.array([complex(rng.gauss(0, 0.3), rng.gauss(0, 0.3)) for _ in rhs])
        for u in list(found):
            end = u
            for a, b in ((rhs, p1), (p1, p2), (p2, rhs)):
                end = _track(end, a, b, d0, d)
                if end is None:
                    break
            if end is not None:
                _add_solution(found, end)
            if len(found) >= expected:
                break
    return used


def _add_solution(found: list, u: np.ndarray) -> bool:
    if any(np.allclose(u, f, atol=1e-6 * (1 + np.linalg.norm(u))) for f in found):
        return False
    found.append(u)
    return True


def _polish(u, rhs, d0, d, dps: int):
    """mpmath Newton on the same system; returns the unknown vector or None."""
    with mpmath.workdps(dps):
        one = mpmath.mpc(1)
        rm = [mpmath.mpf(v.numerator) / v.denominator for v in map(Fraction, rhs)]
        uu = [mpmath.mpc(complex(v)) for v in u]
        n = len(uu)
        eps = mpmath.mpf(10) ** (-dps + 8)
        for _ in range(60):
            F, J = _wronski_system(uu, rm, d0, d, one)
            try:
                step = mpmath.lu_solve(mpmath.matrix(J), mpmath.matrix([-v for v in F]))
            except ZeroDivisionError:
                return None
            uu = [uu[i] + step[i] for i in range(n)]
            if max(abs(step[i]) for i in range(n)) < eps * (1 + max(abs(v) for v in uu)):
                return uu
        return None


def _rationalize(x, tol):
    """Closest rational with bounded denominator, or None if it is not close enough.

    The denominator bound ``tol^(-2/5)`` keeps the square of the bound well below
    ``1/tol``, so an accepted value is not just any number that happens to have a
    close rational approximation.
    """
    max_den = int(mpmath.floor(tol ** mpmath.mpf(-0.4)))
    re = mpmath.re(x)
    if abs(mpmath.im(x)) > tol:
        return None
    man, exp = mpmath.mpf(re).man_exp  # mantissa is unsigned
    q = (Fraction(-man if re < 0 else man) * Fraction(2) ** exp).limit_denominator(max_den)
    if abs(re - mpmath.mpf(q.numerator) / q.denominator) > tol:
        return None
    return q


def _poly_from_roots_mp(roots):
    coeffs = [mpmath.mpc(1)]
    for t in roots:
        new = [mpmath.mpc(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i + 1] += c
            new[i] -= t * c
        coeffs = new
    return coeffs  # ascending


@dataclass
class PlaneSearchReport:
    planes: list[LinearSystemP1]
    approx_roots: list[list[complex]] = field(default_factory=list)
    starts: int = 0
    converged: int = 0
    failures: int = 0
    expected: int = 0
    unverified: int = 0
    monodromy_loops: int = 0


def _check_target(target_roots, d):
    roots = [Fraction(x) for x in target_roots]
    if len(set(roots)) != len(roots):
        raise DomainError("target roots must be distinct (simple ramification)")
    if d < 1:
        raise DomainError("d must be at least 1")
    if len(roots) > 2 * (d - 1):
        raise DomainError(f"at most 2(d-1) = {2 * (d - 1)} finite roots fit in degree {d}")
    return roots


def _solve_w1(w0: UniPoly, target: UniPoly, d: int):
    """Solve ``w0 w1' - w0' w1 = c * target`` with ``w1`` monic of degree ``d``, no ``x^{deg w0}`` term."""
    d0 = w0.degree
    c = d - d0  # leading coefficient of the Wronskian when w0, w1 are monic
    rhs = (target.monic() * c).padded(d0 + d)
    unknowns = [k for k in range(d) if k != d0]
    # w1 = x^d + sum_k b_k x^k; the Wronskian is linear in w1
    def wr(p):
        return w0 * p.derivative() - w0.derivative() * p

    base = wr(UniPoly.monomial(d)).padded(d0 + d)
    cols = [wr(UniPoly.monomial(k)).padded(d0 + d) for k in unknowns]
    n_eq = d0 + d
    aug = [[cols[j][i] for j in range(len(unknowns))] + [rhs[i] - base[i]] for i in range(n_eq)]
    rows, pivots = row_echelon(aug)
    if len(unknowns) in pivots:
        return None  # inconsistent
    sol = {unknowns[p]: row[-1] for p, row in zip(pivots, rows)}
    coeffs = [sol.get(k, 0) for k in range(d)] + [1]
    return UniPoly(coeffs)


def find_planes_r1_report(
    target_roots, d: int, starts: int = 64, seed: int = 0, dps: int = 80, monodromy_loops: int = 40
) -> PlaneSearchReport:
    """Search for every plane over the target and report how the search went.

    Multi-start Newton runs first; if it finds fewer solutions than the
    Schubert-calculus count, monodromy loops in the space of targets fill in
    the rest.  Solutions are then polished, grouped into Galois orbits and
    rebuilt exactly.
    """
    roots = _check_target(target_roots, d)
    k = len(roots)
    w_inf = 2 * (d - 1) - k
    d0 = d - 1 - w_inf
    if d0 < 0:
        raise DomainError("too few finite roots for a base-point-free plane")
    target = UniPoly.from_roots(roots)
    expected = _expected_count(d, w_inf)
    report = PlaneSearchReport([], expected=expected)

    n = d0 + d - 1
    rhs = [c * (d - d0) for c in target.monic().padded(n + 1)[:n]]
    found: list[np.ndarray] = []
    if d0 > 0:
        rng = random.Random(seed)
        center = float(sum(roots) / k) if k else 0.0
        spread = max([abs(float(x) - center) for x in roots] + [1.0])
        rhs_f = np.array([complex(v) for v in rhs])
        for i in range(starts):
            if len(found) >= expected:
                break
            report.starts += 1
            if i % 2 == 0:
                # perturbation of a symmetric configuration: roots of w_0 on a circle
                phase = rng.uniform(0, 2 * np.pi)
                radius = spread * rng.uniform(0.2, 1.5)
                t0 = [
                    center
                    + radius * np.exp(1j * (phase + 2 * np.pi * a / d0))
                    + complex(rng.gauss(0, 0.2), rng.gauss(0, 0.2)) * spread
                    for a in range(d0)
                ]
            else:
                t0 = [center + spread * complex(rng.gauss(0, 0.5), rng.gauss(0, 0.5)) for _ in range(d0)]
            u = _newton(_initial_w1(P.polyfromroots(t0)[:d0], rhs_f, d0, d), rhs_f, d0, d)
            if u is None:
                report.failures += 1
                continue
            report.converged += 1
            _add_solution(found, u)
        report.monodromy_loops = _monodromy(found, rhs_f, d0, d, expected, monodromy_loops, rng)
    report.approx_roots = [list(np.sort_complex(P.polyroots(np.concatenate([u[:d0], [1.0]])))) for u in found]
    # escalate the working precision while some solutions cannot be rebuilt exactly
    for level in range(3):
        report.unverified = 0
        report.planes = _exact_planes(found, rhs, target, d, d0, dps * 2**level, report)
        if not report.unverified:
            break
    return report


def _expected_count(d: int, w_inf: int) -> int:
    # sigma_1^{k} * sigma_{(w_inf)} in G(2, d+1)
    from ..grasscalc import class_of, h_act

    if w_inf == 0:
        return plucker_degree(1, d)
    c = class_of((w_inf,), 1, d)
    for _ in range(2 * (d - 1) - w_inf):
        c = h_act(1, c)
    return int(c.coefficient((d - 1, d - 1)))


def _exact_planes(found, rhs, target, d, d0, dps, report) -> list[LinearSystemP1]:
    if d0 == 0:
        w1 = _solve_w1(UniPoly((1,)), target, d)
        if w1 is None:
            return []
        V = LinearSystemP1([UniPoly((1,)), w1], d)
        return [V] if _verify(V, target) else []
    with mpmath.workdps(dps):
        coeff_sets = []  # w0 coefficients (ascending, monic) for each solution
        for u in found:
            uu = _polish(u, rhs, d0, d, dps)
            if uu is None:
                report.unverified += 1
            else:
                coeff_sets.append(uu[:d0] + [mpmath.mpc(1)])
        rng = random.Random(1)
        weights = [rng.randint(1, 7) for _ in range(d0)]
        prim = [sum(w * c[i] for i, w in enumerate(weights)) for c in coeff_sets]
        tol = mpmath.mpf(10) ** (-(5 * dps) // 8)
        orbits = _galois_orbits(prim, tol)
        planes = []
        for orbit in orbits:
            planes.extend(_planes_for_orbit(orbit, prim, coeff_sets, target, d, d0, tol, report))
    unique: list[LinearSystemP1] = []
    for V in planes:
        if V not in unique:
            unique.append(V)
    return unique


def _galois_orbits(prim, tol):
    remaining = list(range(len(prim)))
    orbits = []
    size = 1
    while remaining:
        hit = None
        for combo in itertools.combinations(remaining, size):
            poly = _poly_from_roots_mp([prim[i] for i in combo])
            if all(_rationalize(c, tol) is not None for c in poly):
                hit = combo
                break
        if hit is None:
            size += 1
            if size > len(remaining):
                orbits.append(tuple(remaining))
                break
            continue
        orbits.append(hit)
        remaining = [i for i in remaining if i not in hit]
    return orbits


def _planes_for_orbit(orbit, prim, coeff_sets, target, d, d0, tol, report):
    n = len(orbit)
    svals = [prim[i] for i in orbit]
    minpoly_mp = _poly_from_roots_mp(svals)
    minpoly = [_rationalize(c, tol) for c in minpoly_mp]
    if any(c is None for c in minpoly):
        report.unverified += n
        return []
    # express each w0 coefficient as sum beta_k s^k over the orbit (Vandermonde solve)
    Vm = mpmath.matrix([[s**k for k in range(n)] for s in svals])
    betas = []
    for i in range(d0):
        y = mpmath.matrix([coeff_sets[o][i] for o in orbit])
        sol = mpmath.lu_solve(Vm, y)
        beta = [_rationalize(sol[k], tol) for k in range(n)]
        if any(b is None for b in beta):
            report.unverified += n
            return []
        betas.append(beta)
    out = []
    m_poly = UniPoly(minpoly)
    for s in svals:
        if n == 1:
            coeffs = [b[0] for b in betas]
        else:
            # a real embedding is stored as a real number
            K = NumberField(m_poly, mpmath.re(s) if abs(mpmath.im(s)) < tol else s, name="a")
            coeffs = [K(UniPoly(b)) for b in betas]
        w0 = UniPoly(coeffs + [1])
        w1 = _solve_w1(w0, target, d)
        if w1 is None:
            report.unverified += 1
            continue
        V = LinearSystemP1([w0, w1], d)
        if _verify(V, target):
            out.append(V)
        else:
            report.unverified += 1
    return out


def _verify(V: LinearSystemP1, target: UniPoly) -> bool:
    W = wronskian_of_system(V)
    return W.monic() == target.monic()


def find_planes_r1(target_roots, d: int, **kwargs) -> list[LinearSystemP1]:
    """All planes in ``G(2, Poly_d)`` whose Wronskian is proportional to ``prod (x - root)``.

    Finite roots must be distinct and rational; the missing weight
    ``2(d-1) - len(roots)`` sits at infinity as a single-row partition.  Every
    returned plane has been verified exactly.
    """
    return find_planes_r1_report(target_roots, d, **kwargs).planes


def planes_d3_oracle(target_roots) -> list[tuple]:
    """Exact elimination for ``d = 3`` and four finite roots.

    With ``w_0 = x^2 + p x + q`` and ``w_1 = x^3 + a x + b`` and target
    ``x^4 - s_1 x^3 + s_2 x^2 - s_3 x + s_4``, the Wronskian equations give
    ``p = -s_1/2``, ``a = 3q - s_2``, ``b = s_3/2`` and
    ``3 q^2 - s_2 q + s_1 s_3 / 4 - s_4 = 0``.  Returns the quadratic for ``q`` and
    ``(p, a-formula, b)``.
    """
    roots = [Fraction(x) for x in target_roots]
    if len(roots) != 4 or len(set(roots)) != 4:
        raise DomainError("the d = 3 oracle needs four distinct roots")
    f = UniPoly.from_roots(roots)
    s1, s2, s3, s4 = -f[3], f[2], -f[1], f[0]
    quad = UniPoly((s1 * s3 / 4 - s4, -s2, 3))
    return [(quad, -s1 / 2, s2, s3 / 2)]
