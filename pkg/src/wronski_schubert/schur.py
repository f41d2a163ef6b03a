"""Complete homogeneous sequences and Schur determinants."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from functools import lru_cache

from .errors import DomainError
from .exactalg import MultiPoly, det
from .partitions import Partition

__all__ = [
    "CoeffSequence",
    "e_names",
    "e_generators",
    "h_from_e",
    "jacobi_trudi_h",
    "schur_delta",
    "schur_delta_index_form",
    "delta_of_composition",
]


class CoeffSequence:
    """A sequence ``a_0, a_1, ...`` with ``a_n = 0`` for negative ``n``.

    Entries beyond the stored prefix are produced by ``extend(n)`` when given,
    otherwise they are zero too.
    """

    def __init__(self, prefix: Sequence, extend: Callable[[int], object] | None = None):
        self.prefix = list(prefix)
        self.extend = extend

    def __getitem__(self, n: int):
        if n < 0:
            return 0
        if n < len(self.prefix):
            return self.prefix[n]
        if self.extend is not None:
            return self.extend(n)
        return 0

    def __len__(self) -> int:
        return len(self.prefix)

    def __iter__(self):
        return iter(self.prefix)

    def __repr__(self) -> str:
        return f"CoeffSequence({self.prefix!r})"


def e_names(r: int) -> tuple[str, ...]:
    return tuple(f"e_{i}" for i in range(1, r + 2))


def e_generators(r: int) -> tuple[MultiPoly, ...]:
    """``e_1, ..., e_{r+1}`` as polynomials of ``E_r = Q[e_1, ..., e_{r+1}]``."""
    names = e_names(r)
    return tuple(MultiPoly.gen(n, names) for n in names)


@lru_cache(maxsize=None)
def _h_universal(r: int, n_max: int) -> tuple[MultiPoly, ...]:
    e = e_generators(r)
    one = MultiPoly.constant(1, e_names(r))
    h = [one]
    for n in range(1, n_max + 1):
        acc = MultiPoly(e_names(r))
        for k in range(1, min(n, r + 1) + 1):
            term = e[k - 1] * h[n - k]
            acc = acc + term if k % 2 else acc - term
        h.append(acc)
    return tuple(h)


def h_from_e(r: int, n_max: int, e=None) -> CoeffSequence:
    """``h_0 .. h_{n_max}`` from ``sum h_n t^n = 1 / (1 - e_1 t + ... + (-1)^(r+1) e_{r+1} t^(r+1))``.

    Without ``e`` the result lives in ``Q[e_1, ..., e_{r+1}]``; otherwise ``e`` is a
    list of ``r + 1`` ring elements and the same recursion runs over their ring.
    """
    if r < 0 or n_max < 0:
        raise DomainError("r and n_max must be nonnegative")
    if e is None:
        return CoeffSequence(_h_universal(r, n_max))
    e = list(e)
    if len(e) != r + 1:
        raise DomainError(f"expected {r + 1} elementary values, got {len(e)}")
    h = [1]
    for n in range(1, n_max + 1):
        acc = 0
        for k in range(1, min(n, r + 1) + 1):
            term = e[k - 1] * h[n - k]
            acc = acc + term if k % 2 else acc - term
        h.append(acc)
    return CoeffSequence(h)


def jacobi_trudi_h(n: int, r: int) -> MultiPoly:
    """``h_n = det(e_{j-i+1})_{1<=i,j<=n}`` with ``e_0 = 1`` and ``e_m = 0`` for ``m > r+1``."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    names = e_names(r)
    if n == 0:
        return MultiPoly.constant(1, names)
    e = e_generators(r)

    def entry(m):
        if m == 0:
            return MultiPoly.constant(1, names)
        if m < 0 or m > r + 1:
            return MultiPoly(names)
        return e[m - 1]

    value = det([[entry(j - i + 1) for j in range(n)] for i in range(n)])
    return value if isinstance(value, MultiPoly) else MultiPoly.constant(value, names)


def delta_of_composition(parts: Sequence[int], a, r: int):
    """Schur determinant for any length ``r+1`` index vector ``(p_0, ..., p_r)``.

    Row ``i``, column ``j`` of the matrix is ``a_{j + p_{r-j} - i}``; for a
    partition this is the displayed determinant of ``Delta_lambda(a)``.
    Non-partition vectors arise when differentiating generalized Wronskians.
    """
    if len(parts) != r + 1:
        raise DomainError(f"need {r + 1} indices, got {len(parts)}")
    n = r + 1
    return det([[a[j + parts[r - j] - i] for j in range(n)] for i in range(n)])


def schur_delta(lam, a, r: int):
    """``Delta_lambda(a)`` for a partition with at most ``r + 1`` parts."""
    lam = Partition(lam)
    if len(lam) > r + 1:
        raise DomainError(f"{lam} has more than r+1 = {r + 1} parts")
    return delta_of_composition(lam.padded(r + 1), a, r)


def schur_delta_index_form(lam, a, r: int):
    """The same determinant built from ``det(a_{i + lambda_{r-i} - j})`` (the transpose)."""
    lam = Partition(lam)
    if len(lam) > r + 1:
        raise DomainError(f"{lam} has more than r+1 = {r + 1} parts")
    p = lam.padded(r + 1)
    n = r + 1
    return det([[a[i + p[r - i] - j] for j in range(n)] for i in range(n)])
