"""Generalized Wronskians of series tuples and the identities they satisfy.

For ``v = (v_0, ..., v_r)`` and a partition ``lambda`` with at most ``r+1`` parts,
``W_lambda(v)`` is the determinant whose row ``k`` is ``D^{k + lambda_{r-k}} v``.
Identity checks return residual series, never booleans, so a failing test can
print the first offending coefficient.
"""

from __future__ import annotations

from collections.abc import Sequence
from math import factorial, prod

from .errors import DomainError
from .exactalg import Series, det_cofactor
from .odeuniv import MonicOperator, fundamental_basis
from .partitions import Partition, partitions_of, pieri_strips, syt_count
from .schur import delta_of_composition, schur_delta

__all__ = [
    "SeriesTuple",
    "gen_wronskian",
    "composition_wronskian",
    "derivative_expansion_residual",
    "derivative_expansion_terms",
    "liouville_residual",
    "giambelli_residual",
    "pieri_residual",
    "rmk72_coefficient",
    "schur_as_ratio",
    "weak_compositions",
    "multinomial",
]


class SeriesTuple(tuple):
    """``r + 1`` series sharing convention and truncation order."""

    def __new__(cls, entries: Sequence[Series]):
        entries = tuple(entries)
        if not entries:
            raise DomainError("a series tuple needs at least one entry")
        if any(not isinstance(s, Series) for s in entries):
            raise DomainError("series tuple entries must be Series")
        conv = {s.convention for s in entries}
        if len(conv) != 1:
            raise DomainError("series tuple mixes conventions")
        Ns = {s.N for s in entries}
        if len(Ns) != 1:
            raise DomainError(f"series tuple has non-uniform truncation orders {sorted(Ns)}")
        return super().__new__(cls, entries)

    @property
    def r(self) -> int:
        return len(self) - 1

    @property
    def N(self) -> int:
        return self[0].N

    @property
    def convention(self) -> str:
        return self[0].convention


def _as_tuple(v) -> SeriesTuple:
    return v if isinstance(v, SeriesTuple) else SeriesTuple(v)


def composition_wronskian(parts: Sequence[int], v) -> Series:
    """Wronskian whose row ``k`` is ``D^{k + parts[r-k]} v`` for any index vector."""
    v = _as_tuple(v)
    r = v.r
    if len(parts) != r + 1:
        raise DomainError(f"need {r + 1} indices, got {len(parts)}")
    orders = [k + parts[r - k] for k in range(r + 1)]
    top = max(orders)
    if top > v.N:
        raise DomainError(f"derivative order {top} exceeds truncation order {v.N}")
    M = v.N - top
    rows = [[s.derive(o).truncate(M) for s in v] for o in orders]
    value = det_cofactor(rows)
    if isinstance(value, Series):
        return value
    return Series.zero(M, v.convention) + value


def gen_wronskian(lam, v) -> Series:
    """``W_lambda(v)``; ``lambda = 0`` gives the ordinary Wronskian."""
    v = _as_tuple(v)
    lam = Partition(lam)
    if len(lam) > v.r + 1:
        raise DomainError(f"{lam} has more than r+1 = {v.r + 1} parts")
    return composition_wronskian(lam.padded(v.r + 1), v)


def derivative_expansion_terms(h: int, r: int) -> list[tuple[Partition, int]]:
    """``(lambda, syt_count(lambda))`` for ``|lambda| = h`` with at most ``r+1`` parts."""
    return [(lam, syt_count(lam)) for lam in partitions_of(h, max_parts=r + 1)]


def derivative_expansion_residual(v, h: int) -> Series:
    """``D^h W_0(v) - sum syt(lambda) W_lambda(v)``; identically zero."""
    v = _as_tuple(v)
    if h < 0:
        raise DomainError("h must be nonnegative")
    if v.r + h > v.N:
        raise DomainError(f"truncation {v.N} too small for {h} derivatives of a Wronskian of order {v.r}")
    res = gen_wronskian((), v).derive(h)
    for lam, c in derivative_expansion_terms(h, v.r):
        res = res - gen_wronskian(lam, v) * c
    return res


def liouville_residual(op: MonicOperator, k: int, N: int) -> Series:
    """``W_{1^k}(u) - e_k W_0(u)`` on the fundamental basis."""
    if not 1 <= k <= op.order:
        raise DomainError(f"k must lie in 1..{op.order}, got {k}")
    u = fundamental_basis(op, N)
    return gen_wronskian((1,) * k, u) - gen_wronskian((), u) * op.e(k)


def giambelli_residual(lam, op: MonicOperator, N: int) -> Series:
    """``W_lambda(u) - Delta_lambda(h) W_0(u)`` on the fundamental basis."""
    lam = Partition(lam)
    if len(lam) > op.order:
        raise DomainError(f"{lam} has more than r+1 = {op.order} parts")
    u = fundamental_basis(op, N)
    h = op.h((lam[0] if lam else 0) + op.r)
    return gen_wronskian(lam, u) - gen_wronskian((), u) * schur_delta(lam, h, op.r)


def pieri_residual(i: int, lam, op: MonicOperator, N: int) -> Series:
    """``h_i W_lambda(u) - sum W_mu(u)`` over horizontal strips ``mu / lambda`` of size ``i``."""
    lam = Partition(lam)
    if len(lam) > op.order:
        raise DomainError(f"{lam} has more than r+1 = {op.order} parts")
    u = fundamental_basis(op, N)
    h = op.h(i)
    res = gen_wronskian(lam, u) * h[i]
    cols = (lam[0] if lam else 0) + i
    for mu in pieri_strips(lam, i, rect=(op.order, cols)):
        res = res - gen_wronskian(mu, u)
    return res


def weak_compositions(n: int, parts: int):
    """All ``(m_0, ..., m_{parts-1})`` of nonnegative integers summing to ``n``."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    for first in range(n + 1):
        for rest in weak_compositions(n - first, parts - 1):
            yield (first,) + rest


def multinomial(n: int, mu: Sequence[int]) -> int:
    """Coefficient of ``x_0^{mu_0} ... x_r^{mu_r}`` in ``(x_0 + ... + x_r)^n``."""
    if sum(mu) != n:
        return 0
    return factorial(n) // prod(factorial(m) for m in mu)


def rmk72_coefficient(lam, n: int, r: int, op: MonicOperator | None = None):
    """``n``-th exponential coefficient of ``W_lambda(u)`` from Schur determinants.

    The sum runs over weak compositions ``mu`` of ``n`` into ``r + 1`` parts (every
    way of distributing ``n`` derivatives over the rows), weighted by the
    multinomial coefficient, of ``Delta_{lambda + mu}(h)``.  Terms where
    ``lambda + mu`` is not a partition do not vanish in general; the determinant
    formula handles them directly.
    """
    lam = Partition(lam)
    op = op if op is not None else MonicOperator.universal(r)
    if op.r != r:
        raise DomainError(f"operator has r={op.r}, expected {r}")
    if n < 0:
        raise DomainError("n must be nonnegative")
    p = lam.padded(r + 1)
    h = op.h((lam[0] if lam else 0) + n + r)
    total = 0
    for mu in weak_compositions(n, r + 1):
        parts = tuple(a + b for a, b in zip(p, mu))
        value = delta_of_composition(parts, h, r)
        if value:
            total = total + value * multinomial(n, mu)
    return total


def schur_as_ratio(lam, op: MonicOperator, N: int) -> Series:
    """``W_lambda(u) / W_0(u)`` as a series; it is the constant ``Delta_lambda(h)``."""
    u = fundamental_basis(op, N)
    w = gen_wronskian(lam, u)
    w0 = gen_wronskian((), u).truncate(w.N)
    return w * w0.invert()
