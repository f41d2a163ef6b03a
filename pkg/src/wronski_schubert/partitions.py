"""Partitions, hook lengths, standard Young tableau counts and Pieri strips."""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import comb, factorial, prod

from .errors import DomainError

__all__ = [
    "Partition",
    "syt_count",
    "hooks",
    "pieri_strips",
    "rect_enumerate",
    "complement",
    "partitions_of",
    "count_tableaux_brute",
]


class Partition(tuple):
    """A weakly decreasing tuple of nonnegative integers, trailing zeros trimmed.

    Zero padding to ``(lambda_0, ..., lambda_r)`` happens only at Wronskian and
    Schur call sites, through :meth:`padded` or :meth:`part`.
    """

    def __new__(cls, parts=()):
        if isinstance(parts, str):
            return cls.parse(parts)
        if isinstance(parts, int):
            parts = (parts,)
        ps = [int(p) for p in parts]
        if any(p < 0 for p in ps):
            raise DomainError(f"negative part in {ps}")
        if any(a < b for a, b in zip(ps, ps[1:])):
            raise DomainError(f"{ps} is not weakly decreasing")
        while ps and ps[-1] == 0:
            ps.pop()
        return super().__new__(cls, ps)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse the text form ``"3,1,1"``; ``""`` and ``"0"`` give the empty partition."""
        text = text.strip()
        if not text:
            return cls(())
        return cls(int(tok) for tok in text.split(","))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(tuple(self))

    def part(self, i: int) -> int:
        return tuple.__getitem__(self, i) if 0 <= i < len(self) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise DomainError(f"{self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def conjugate(self) -> Partition:
        if not self:
            return Partition(())
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def fits(self, rows: int, cols: int) -> bool:
        return len(self) <= rows and (not self or self[0] <= cols)

    def boxes(self):
        for i, p in enumerate(self):
            for j in range(p):
                yield i, j

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "0"

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


def hooks(lam) -> list[int]:
    """Hook length ``arm + leg + 1`` of every box, listed row by row."""
    lam = Partition(lam)
    conj = lam.conjugate()
    return [(lam[i] - j - 1) + (conj[j] - i - 1) + 1 for i, j in lam.boxes()]


def syt_count(lam) -> int:
    """Number of standard Young tableaux of shape ``lam`` via the hook formula."""
    lam = Partition(lam)
    return factorial(lam.weight) // prod(hooks(lam))


@lru_cache(maxsize=None)
def _brute(shape: tuple[int, ...]) -> int:
    # remove the box carrying the largest label: it must be a corner
    if sum(shape) == 0:
        return 1
    total = 0
    for i, p in enumerate(shape):
        if p and (i + 1 == len(shape) or shape[i + 1] < p):
            total += _brute(shape[:i] + (p - 1,) + shape[i + 1 :])
    return total


def count_tableaux_brute(lam) -> int:
    """Count standard tableaux by peeling corners; independent of the hook formula."""
    return _brute(tuple(Partition(lam)))


def partitions_of(n: int, max_parts: int | None = None, max_part: int | None = None) -> list[Partition]:
    """All partitions of ``n``, in reverse lexicographic order."""
    out: list[Partition] = []
    top = n if max_part is None else min(n, max_part)

    def rec(remaining, bound, acc):
        if remaining == 0:
            out.append(Partition(acc))
            return
        if max_parts is not None and len(acc) == max_parts:
            return
        for p in range(min(remaining, bound), 0, -1):
            rec(remaining - p, p, acc + [p])

    rec(n, top, [])
    return out


def rect_enumerate(rows: int, cols: int) -> list[Partition]:
    """Partitions with at most ``rows`` parts, each at most ``cols``."""
    if rows < 0 or cols < 0:
        raise DomainError("rectangle dimensions must be nonnegative")
    out: list[Partition] = []

    def rec(i, bound, acc):
        if i == rows:
            out.append(Partition(acc))
            return
        for p in range(bound, -1, -1):
            rec(i + 1, p, acc + [p])

    rec(0, cols, [])
    out.sort(key=lambda p: (p.weight, tuple(-x for x in p)))
    assert len(out) == comb(rows + cols, rows)
    return out


def pieri_strips(lam, i: int, rect: tuple[int, int] | None = None) -> list[Partition]:
    """Partitions ``mu`` with ``|mu| = |lam| + i`` interlacing ``lam``.

    Interlacing means ``mu_0 >= lam_0 >= mu_1 >= lam_1 >= ...``, i.e. ``mu / lam``
    is a horizontal strip.  ``rect = (rows, cols)`` keeps only the ``mu`` that
    fit the rectangle.
    """
    if i < 0:
        raise DomainError("strip size must be nonnegative")
    lam = Partition(lam)
    n = len(lam) + 1
    if rect is not None:
        n = min(n, rect[0])
        if len(lam) > rect[0]:
            return []
    ranges = []
    for k in range(n):
        lo = lam.part(k)
        hi = lo + i if k == 0 else lam.part(k - 1)
        if rect is not None:
            hi = min(hi, rect[1])
        if hi < lo:
            return []
        ranges.append(range(lo, hi + 1))
    out = []
    target = lam.weight + i
    for parts in product(*ranges):
        if sum(parts) == target:
            out.append(Partition(parts))
    out.sort(key=lambda p: tuple(-x for x in p))
    return out


def complement(lam, rect: tuple[int, int]) -> Partition:
    """Complement of ``lam`` in the ``rows x cols`` rectangle, rotated by 180 degrees."""
    rows, cols = rect
    lam = Partition(lam)
    if not lam.fits(rows, cols):
        raise DomainError(f"{lam} does not fit in the {rows}x{cols} rectangle")
    padded = lam.padded(rows)
    return Partition(cols - padded[rows - 1 - i] for i in range(rows))
