"""Osculating flag at infinity, intermediate Wronskians and the master function.

Notation: ``V_0 ⊂ ... ⊂ V_r = V`` with ``V_j = V ∩ Poly_{d_j}``, ``W_j`` the
Wronskian of a basis of ``V_j``, ``Z_i = prod_j (x - z_j)^{m_j(i)}`` with
``m_j(i) = lambda_{j,r} + ... + lambda_{j,r-i}``, and ``T_{r-i} = W_i / Z_i``
(made monic).  ``Delta(constant) = 1`` and ``Res(c, g) = c^{deg g}``, so a
``T`` that collapses to a constant contributes trivially.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import ConfigMismatchError, DegenerateConfigurationError, DomainError, SingularPointError
from ..exactalg import ORDINARY, Series, UniPoly, discriminant, format_rational, rank, resultant, row_echelon
from ..partitions import Partition
from .system import INFINITY, LinearSystemP1, coeff_text, order_partition_at, taylor_tuple, wronskian_of_system

__all__ = [
    "FlagData",
    "RamificationConfig",
    "TPolyData",
    "NondegeneracyReport",
    "DegreeFormulaWarning",
    "intermediate_wronskians",
    "z_polys",
    "t_polys",
    "relative_split",
    "relative_discriminant",
    "relative_resultant",
    "master_function",
    "nondegenerate",
    "nondegenerate_t",
    "reconstruct_basis_series",
    "span_check",
]


class DegreeFormulaWarning(UserWarning):
    """The printed degree formula for ``T`` disagrees with the exact division."""


def _wronskian(polys) -> UniPoly:
    if len(polys) == 1:
        return polys[0]
    return wronskian_of_system(LinearSystemP1(polys, max(p.degree for p in polys)))


@dataclass(frozen=True)
class FlagData:
    """Flag basis ``w_0 .. w_r`` with strictly increasing degrees and ``W_j = Wr(w_0..w_j)``."""

    flag_basis: tuple[UniPoly, ...]
    degrees: tuple[int, ...]
    wronskians: tuple[UniPoly, ...]
    d: int

    @property
    def r(self) -> int:
        return len(self.flag_basis) - 1

    def to_json(self) -> dict:
        return {
            "degrees": list(self.degrees),
            "flag_basis": [[coeff_text(c) for c in w.coeffs] for w in self.flag_basis],
            "wronskians": [[coeff_text(c) for c in w.coeffs] for w in self.wronskians],
        }


def intermediate_wronskians(V: LinearSystemP1) -> FlagData:
    """Echelonize from the top degree down, then take Wronskians of initial segments."""
    rows, pivots = row_echelon(V.coefficient_matrix(), range(V.d, -1, -1))
    pairs = sorted(zip(pivots, rows))
    basis = tuple(UniPoly(row) for _, row in pairs)
    degrees = tuple(p for p, _ in pairs)
    wrs = tuple(_wronskian(list(basis[: j + 1])) for j in range(len(basis)))
    return FlagData(basis, degrees, wrs, V.d)


@dataclass(frozen=True)
class RamificationConfig:
    """Prescribed partitions at finite points ``z_j`` and at infinity."""

    points: tuple[Fraction, ...]
    partitions: tuple[Partition, ...]
    infinity: Partition = Partition(())

    def __post_init__(self):
        pts = tuple(Fraction(p) if not isinstance(p, str) else Fraction(p.strip()) for p in self.points)
        parts = tuple(Partition(p) for p in self.partitions)
        if len(pts) != len(parts):
            raise DomainError("one partition per point is required")
        if len(set(pts)) != len(pts):
            raise DegenerateConfigurationError("ramification points must be distinct")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "partitions", parts)
        object.__setattr__(self, "infinity", Partition(self.infinity))

    def total_weight(self) -> int:
        return sum(p.weight for p in self.partitions) + self.infinity.weight

    def validate(self, r: int, d: int) -> None:
        rows, cols = r + 1, d - r
        for lam in self.partitions + (self.infinity,):
            if not lam.fits(rows, cols):
                raise DomainError(f"{lam} does not fit in the {rows}x{cols} rectangle")
        if self.total_weight() != rows * cols:
            raise DomainError(f"weights add up to {self.total_weight()}, expected {rows * cols}")

    def to_json(self) -> dict:
        return {
            "points": [format_rational(p) for p in self.points],
            "partitions": [list(p) for p in self.partitions],
            "infinity": list(self.infinity),
        }

    @classmethod
    def from_json(cls, data: dict) -> RamificationConfig:
        try:
            return cls(
                tuple(Fraction(str(p)) for p in data.get("points", [])),
                tuple(Partition(p) for p in data.get("partitions", [])),
                Partition(data.get("infinity", [])),
            )
        except (TypeError, ValueError) as exc:
            raise DomainError(f"malformed ramification config: {exc}") from exc

    @classmethod
    def of_system(cls, V: LinearSystemP1) -> RamificationConfig:
        """The configuration a system actually has at its rational ramification points."""
        from .system import ramification_profile

        prof = ramification_profile(V)
        finite = [p for p in prof.points if p.point is not INFINITY]
        inf = [p for p in prof.points if p.point is INFINITY]
        return cls(
            tuple(p.point for p in finite),
            tuple(p.partition for p in finite),
            inf[0].partition if inf else Partition(()),
        )


def _m(lam: Partition, i: int, r: int) -> int:
    p = lam.padded(r + 1)
    return sum(p[r - l] for l in range(i + 1))


def z_polys(config: RamificationConfig, r: int) -> list[UniPoly]:
    """``Z_0 .. Z_r``."""
    out = []
    for i in range(r + 1):
        Z = UniPoly((1,))
        for z, lam in zip(config.points, config.partitions):
            m = _m(lam, i, r)
            if m:
                Z = Z * UniPoly((-z, 1)) ** m
        out.append(Z)
    return out


@dataclass(frozen=True)
class TPolyData:
    """``T_0 .. T_r`` (index = subscript) with the degree bookkeeping.

    ``printed_degrees[i]`` evaluates ``(i+1)(d-i) - sum_{l<=i} lambda_{inf, r-l} - sum_j m_j(i)``
    for ``T_{r-i}``; ``derived_degrees[i]`` uses
    ``(i+1)(d-r) - sum_{l<=i} lambda_{inf, l} - sum_j m_j(i)``, which follows from
    ``deg w_l = d - r + l - lambda_{inf, l}``.
    """

    t: tuple[UniPoly, ...]
    z: tuple[UniPoly, ...]
    flag: FlagData
    degrees: tuple[int, ...]
    printed_degrees: tuple[int, ...]
    derived_degrees: tuple[int, ...]
    notes: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "T": [[coeff_text(c) for c in t.coeffs] for t in self.t],
            "Z": [[coeff_text(c) for c in z.coeffs] for z in self.z],
            "degrees_by_i": list(self.degrees),
            "printed_formula_by_i": list(self.printed_degrees),
            "derived_formula_by_i": list(self.derived_degrees),
            "notes": list(self.notes),
        }


def t_polys(V: LinearSystemP1, config: RamificationConfig, check_orders: bool = True) -> TPolyData:
    """``T_{r-i} = W_i / Z_i`` made monic; divisibility is required, not assumed."""
    r, d = V.r, V.d
    config.validate(r, d)
    if check_orders:
        for z, lam in zip(config.points, config.partitions):
            got = order_partition_at(V, z).partition
            if got != lam:
                raise ConfigMismatchError(f"V has partition {got} at {format_rational(z)}, config says {lam}")
        got_inf = order_partition_at(V, INFINITY).partition
        if got_inf != config.infinity:
            raise ConfigMismatchError(f"V has partition {got_inf} at infinity, config says {config.infinity}")
    flag = intermediate_wronskians(V)
    Z = z_polys(config, r)
    T: list[UniPoly | None] = [None] * (r + 1)
    degrees, printed, derived, notes = [], [], [], []
    inf = config.infinity.padded(r + 1)
    for i in range(r + 1):
        q, rem = divmod(flag.wronskians[i], Z[i])
        if rem:
            raise ConfigMismatchError(f"Z_{i} does not divide W_{i}")
        T[r - i] = q.monic()
        degrees.append(q.degree)
        msum = sum(_m(lam, i, r) for lam in config.partitions)
        printed.append((i + 1) * (d - i) - sum(inf[r - l] for l in range(i + 1)) - msum)
        derived.append((i + 1) * (d - r) - sum(inf[l] for l in range(i + 1)) - msum)
        if printed[-1] != q.degree:
            msg = f"deg T_{r - i} = {q.degree}, printed degree formula gives {printed[-1]}"
            notes.append(msg)
            warnings.warn(msg, DegreeFormulaWarning, stacklevel=2)
    return TPolyData(tuple(T), tuple(Z), flag, tuple(degrees), tuple(printed), tuple(derived), tuple(notes))


def relative_split(f: UniPoly, z) -> tuple[UniPoly, UniPoly]:
    """``f = T * Z`` with ``Z = prod (x - z_j)^{ord_{z_j} f}``; returns ``(T, Z)``."""
    if not f:
        raise DomainError("the zero polynomial has no relative split")
    Z = UniPoly((1,))
    for zj in z:
        m = f.root_multiplicity(zj)
        if m:
            Z = Z * UniPoly((-Fraction(zj), 1)) ** m
    return f.exact_div(Z), Z


def _disc(f: UniPoly):
    return Fraction(1) if f.degree < 1 else discriminant(f)


def relative_discriminant(f: UniPoly, z):
    """``Delta(T) * Res(Z, T)^2`` for the split ``f = T Z``."""
    T, Z = relative_split(f, z)
    res = resultant(Z, T)
    return _disc(T) * res * res


def relative_resultant(f1: UniPoly, f2: UniPoly, z):
    """``Res(T_1, T_2) Res(T_1, Z_2) Res(T_2, Z_1)``."""
    T1, Z1 = relative_split(f1, z)
    T2, Z2 = relative_split(f2, z)
    return resultant(T1, T2) * resultant(T1, Z2) * resultant(T2, Z1)


def _ws_from_t(config: RamificationConfig, t_list) -> tuple[int, list[UniPoly]]:
    t_list = [t if isinstance(t, UniPoly) else UniPoly(t) for t in t_list]
    r = len(t_list)
    T = [UniPoly((1,))] + t_list  # T_0 = 1
    Z = z_polys(config, r)
    return r, [T[r - i] * Z[i] for i in range(r + 1)]


def master_function(config: RamificationConfig, t_list, full: bool = False):
    """``Phi`` from ``T_1 .. T_r`` (``T_0 = 1``), with ``W_i = T_{r-i} Z_i``.

    The default evaluates the product as printed,
    ``Delta_z(W_0) ... Delta_z(W_{r-1}) / (Res_z(W_1, W_2) ... Res_z(W_{r-1}, W_r))``;
    ``full=True`` also divides by ``Res_z(W_0, W_1)``, the form whose critical
    points are the Bethe equations used by :func:`critical_residual`.
    """
    r, W = _ws_from_t(config, t_list)
    z = config.points
    num = Fraction(1)
    for i in range(r):
        num = num * relative_discriminant(W[i], z)
    den = Fraction(1)
    start = 0 if full else 1
    for i in range(start, r):
        den = den * relative_resultant(W[i], W[i + 1], z)
    if not den:
        raise DegenerateConfigurationError("a relative resultant in the denominator vanishes")
    return num / den


@dataclass(frozen=True)
class NondegeneracyReport:
    ok: bool
    violations: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {"nondegenerate": self.ok, "violations": list(self.violations)}


def nondegenerate_t(config: RamificationConfig, t_list) -> NondegeneracyReport:
    """Check (i) ``T_i(z_j) != 0``, (ii) ``Delta(T_i) != 0``, (iii) ``Res(T_i, T_{i-1}) != 0``."""
    T = [UniPoly((1,))] + [t if isinstance(t, UniPoly) else UniPoly(t) for t in t_list]
    bad = []
    for i in range(1, len(T)):
        for j, z in enumerate(config.points):
            if not T[i](z):
                bad.append(f"(i) T_{i}(z_{j + 1}) = 0 at z = {format_rational(z)}")
        if T[i].degree >= 2 and not discriminant(T[i]):
            bad.append(f"(ii) T_{i} has a multiple root")
        if i >= 2 and T[i].degree >= 1 and T[i - 1].degree >= 1 and not resultant(T[i], T[i - 1]):
            bad.append(f"(iii) T_{i} and T_{i - 1} share a root")
    return NondegeneracyReport(not bad, tuple(bad))


def nondegenerate(V: LinearSystemP1, config: RamificationConfig) -> NondegeneracyReport:
    data = t_polys(V, config)
    return nondegenerate_t(config, data.t[1:])


def _taylor(p: UniPoly, a, N: int) -> Series:
    return Series.from_poly(p.taylor_shift(a).padded(N + 1), N, ORDINARY)


def reconstruct_basis_series(flag: FlagData, a, N: int) -> list[Series]:
    """Iterated-integral basis at the ordinary point ``a``.

    With ``W_{-1} = 1`` and ``q_j = W_{j-2} W_j / W_{j-1}^2``, the series are
    ``g_0 = W_0`` and ``g_i = W_0 * I(q_1 * I(q_2 * ... I(q_i)))``, where ``I`` is
    formal integration from ``a``.  They span the Taylor expansion of ``V`` at ``a``.
    """
    a = Fraction(a)
    r = flag.r
    if N < r + 2:
        raise DomainError(f"N must be at least r + 2 = {r + 2}")
    for j, Wj in enumerate(flag.wronskians):
        if not Wj(a):
            raise SingularPointError(f"W_{j} vanishes at {format_rational(a)}")
    W = [_taylor(Wj, a, N) for Wj in flag.wronskians]
    one = Series.one(N)

    def Wm(j):
        return one if j < 0 else W[j]

    q = [None] + [Wm(j - 2) * Wm(j) * (Wm(j - 1) * Wm(j - 1)).invert() for j in range(1, r + 1)]
    out = [W[0]]
    for i in range(1, r + 1):
        acc = q[i]
        for j in range(i, 0, -1):
            acc = acc.integrate().truncate(N)
            if j > 1:
                acc = q[j - 1] * acc
        out.append(W[0] * acc)
    return out


def span_check(V: LinearSystemP1, series, a) -> tuple[int, int]:
    """Ranks of the series alone and together with ``V``'s Taylor expansion at ``a``."""
    N = min(s.N for s in series)
    own = [list(s.truncate(N).coeffs) for s in series]
    basis = [list(s.coeffs) for s in taylor_tuple(V, Fraction(a), N)]
    return rank(own), rank(own + basis)
