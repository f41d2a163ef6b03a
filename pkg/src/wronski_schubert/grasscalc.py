"""Schubert calculus on G(r+1, d+1) in the exterior-power model over a point.

A Schubert class is a rational combination of wedge monomials
``mu^{a_0} ^ ... ^ mu^{a_r}`` with ``0 <= a_0 < ... < a_r <= d``.  The partition
``lambda`` corresponds to the indices ``(lambda_r, 1 + lambda_{r-1}, ..., r + lambda_0)``.
The complete homogeneous class ``h_i`` acts as the Hasse-Schmidt derivation
``D_i(u_0 ^ ... ^ u_r) = sum D_{c_0} u_0 ^ ... ^ D_{c_r} u_r`` over weak
compositions ``c`` of ``i``, with ``D_c mu^j = mu^{j+c}`` and ``mu^j = 0`` for
``j > d`` (trivial bundle: no higher Chern class corrections).  Products use a
Giambelli expansion of one factor as a polynomial in these operators.
"""

from __future__ import annotations

import warnings
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .errors import DomainError
from .exactalg import MultiPoly, det
from .partitions import Partition, complement

__all__ = [
    "WedgeMonomial",
    "GrassClass",
    "IntersectionWeightWarning",
    "class_of",
    "h_act",
    "multiply",
    "intersection_number",
    "plucker_degree",
    "giambelli_h_polynomial",
]


class IntersectionWeightWarning(UserWarning):
    """The partition weights do not add up to the dimension of the Grassmannian."""


class WedgeMonomial(tuple):
    """Strictly increasing index tuple ``(a_0, ..., a_r)``."""

    def __new__(cls, indices):
        idx = tuple(int(a) for a in indices)
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise DomainError(f"wedge indices {idx} are not strictly increasing")
        if idx and idx[0] < 0:
            raise DomainError(f"negative wedge index in {idx}")
        return super().__new__(cls, idx)

    @classmethod
    def from_partition(cls, lam, r: int) -> WedgeMonomial:
        p = Partition(lam).padded(r + 1)
        return cls(k + p[r - k] for k in range(r + 1))

    def partition(self) -> Partition:
        r = len(self) - 1
        return Partition(self[r - k] - (r - k) for k in range(r + 1))

    def __str__(self) -> str:
        return "^".join(f"mu^{a}" for a in self)

    def __repr__(self) -> str:
        return f"WedgeMonomial({tuple(self)!r})"


def _straighten(indices, d: int):
    """Sort an index vector into a wedge monomial; return ``(sign, monomial)`` or None."""
    if max(indices) > d or len(set(indices)) < len(indices):
        return None
    idx = list(indices)
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    return sign, WedgeMonomial(idx)


class GrassClass:
    """An element of the Chow ring of G(r+1, d+1) with rational coefficients."""

    __slots__ = ("r", "d", "terms")

    def __init__(self, r: int, d: int, terms=None):
        if r < 0 or d < r:
            raise DomainError(f"need 0 <= r <= d, got r={r}, d={d}")
        self.r = r
        self.d = d
        clean = {}
        for mono, c in (terms or {}).items():
            mono = mono if isinstance(mono, WedgeMonomial) else WedgeMonomial(mono)
            if len(mono) != r + 1 or (mono and mono[-1] > d):
                raise DomainError(f"{mono} is not a wedge monomial of G({r + 1},{d + 1})")
            c = Fraction(c)
            if c:
                clean[mono] = c.numerator if c.denominator == 1 else c
        self.terms = clean

    @property
    def context(self) -> tuple[int, int]:
        return (self.r, self.d)

    @property
    def rect(self) -> tuple[int, int]:
        return (self.r + 1, self.d - self.r)

    def _check(self, other: GrassClass):
        if not isinstance(other, GrassClass):
            raise DomainError("expected a GrassClass")
        if self.context != other.context:
            raise DomainError(f"context mismatch: G{self.context} vs G{other.context}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return GrassClass(self.r, self.d, out)

    def __neg__(self):
        return GrassClass(self.r, self.d, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> GrassClass:
        return GrassClass(self.r, self.d, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, GrassClass):
            return multiply(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        if isinstance(other, GrassClass):
            return self.context == other.context and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.context, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, lam):
        return self.terms.get(WedgeMonomial.from_partition(lam, self.r), 0)

    def by_partition(self) -> dict[Partition, object]:
        """Coefficients keyed by partition, sorted by weight then reverse-lex."""
        items = [(m.partition(), c) for m, c in self.terms.items()]
        items.sort(key=lambda pc: (pc[0].weight, tuple(-x for x in pc[0])))
        return dict(items)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for lam, c in self.by_partition().items():
            body = f"s({lam})"
            if c == 1:
                term = body
            elif c == -1:
                term = "-" + body
            else:
                term = f"{c}*{body}"
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"GrassClass(r={self.r}, d={self.d}, {self})"


def class_of(lam, r: int, d: int) -> GrassClass:
    """The Schubert class ``sigma_lambda`` as its wedge monomial."""
    lam = Partition(lam)
    if r < 0 or d < r:
        raise DomainError(f"need 0 <= r <= d, got r={r}, d={d}")
    if not lam.fits(r + 1, d - r):
        raise DomainError(f"{lam} does not fit in the {r + 1}x{d - r} rectangle")
    return GrassClass(r, d, {WedgeMonomial.from_partition(lam, r): 1})


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _h_on_monomial(i: int, mono: tuple[int, ...], d: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    acc: dict[WedgeMonomial, int] = {}
    for comp in _compositions(i, len(mono)):
        res = _straighten([a + c for a, c in zip(mono, comp)], d)
        if res is None:
            continue
        sign, m = res
        acc[m] = acc.get(m, 0) + sign
    return tuple((m, c) for m, c in acc.items() if c)


def h_act(i: int, c: GrassClass) -> GrassClass:
    """Apply the complete homogeneous class ``h_i`` to ``c``."""
    if i < 0:
        raise DomainError("h_i needs i >= 0")
    if i == 0:
        return c
    out: dict[WedgeMonomial, object] = {}
    for mono, coeff in c.terms.items():
        for m, s in _h_on_monomial(i, tuple(mono), c.d):
            out[m] = out.get(m, 0) + s * coeff
    return GrassClass(c.r, c.d, out)


def _h_names(n: int) -> tuple[str, ...]:
    return tuple(f"h_{k}" for k in range(1, n + 1))


@lru_cache(maxsize=None)
def giambelli_h_polynomial(lam: tuple[int, ...], r: int) -> MultiPoly:
    """``Delta_lambda(h)`` as a polynomial in symbols ``h_1, h_2, ...`` (``h_0 = 1``)."""
    lam = Partition(lam)
    top = (lam[0] if lam else 0) + r
    names = _h_names(max(top, 1))
    gens = {k: MultiPoly.gen(f"h_{k}", names) for k in range(1, top + 1)}

    def a(n):
        if n < 0:
            return 0
        if n == 0:
            return 1
        return gens[n]

    p = lam.padded(r + 1)
    value = det([[a(j + p[r - j] - i) for j in range(r + 1)] for i in range(r + 1)])
    return value if isinstance(value, MultiPoly) else MultiPoly.constant(value, names)


def _act_polynomial(poly: MultiPoly, c: GrassClass) -> GrassClass:
    total = GrassClass(c.r, c.d)
    for exps, coeff in poly.terms.items():
        cur = c
        for name, k in zip(poly.gens, exps):
            idx = int(name.split("_")[1])
            for _ in range(k):
                cur = h_act(idx, cur)
                if not cur:
                    break
            if not cur:
                break
        if cur:
            total = total + cur.scale(coeff)
    return total


def multiply(c1: GrassClass, c2: GrassClass) -> GrassClass:
    """Product in the Chow ring: each term of ``c1`` acts on ``c2`` through Giambelli."""
    c1._check(c2)
    total = GrassClass(c2.r, c2.d)
    for mono, coeff in c1.terms.items():
        lam = mono.partition()
        poly = giambelli_h_polynomial(tuple(lam), c1.r)
        total = total + _act_polynomial(poly, c2).scale(coeff)
    return total


def intersection_number(lambdas, r: int, d: int) -> int:
    """Coefficient of the top class in ``sigma_{lambda_1} ... sigma_{lambda_k}``.

    A weight sum different from ``(r+1)(d-r)`` gives 0 and an
    :class:`IntersectionWeightWarning`.
    """
    lambdas = [Partition(lam) for lam in lambdas]
    rows, cols = r + 1, d - r
    if r < 0 or d < r:
        raise DomainError(f"need 0 <= r <= d, got r={r}, d={d}")
    if sum(lam.weight for lam in lambdas) != rows * cols:
        warnings.warn(
            f"weights sum to {sum(lam.weight for lam in lambdas)}, not {rows * cols}",
            IntersectionWeightWarning,
            stacklevel=2,
        )
        return 0
    if any(not lam.fits(rows, cols) for lam in lambdas):
        return 0
    cur = class_of((), r, d)
    # sigma_1 factors go through h_1 directly; the rest through Giambelli
    for lam in sorted(lambdas, key=lambda p: -p.weight):
        if tuple(lam) == (1,):
            cur = h_act(1, cur)
        else:
            cur = multiply(class_of(lam, r, d), cur)
        if not cur:
            return 0
    top = Partition((cols,) * rows)
    value = cur.coefficient(top)
    return int(value)


def plucker_degree(r: int, d: int) -> int:
    """Degree of G(r+1, d+1) in the Plücker embedding.

    ``1! 2! ... r! * ((r+1)(d-r))! / ((d-r)! (d-r+1)! ... d!)``.
    """
    if r < 0 or d < 0 or r > d:
        raise DomainError(f"need 0 <= r <= d, got r={r}, d={d}")
    num = prod(factorial(i) for i in range(1, r + 1)) * factorial((r + 1) * (d - r))
    den = prod(factorial(i) for i in range(d - r, d + 1))
    q, rem = divmod(num, den)
    assert rem == 0
    return q


def duality_pairing(lam, r: int, d: int) -> int:
    """``int sigma_lambda * sigma_{complement}``; equals 1 by duality."""
    mu = complement(lam, (r + 1, d - r))
    return intersection_number([lam, mu], r, d)
