"""Linear systems of polynomials on the projective line and their ramification."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from ..errors import DegenerateSystemError, DomainError
from ..exactalg import ORDINARY, NumberFieldElement, Series, UniPoly, det, det_cofactor, format_rational, rank, row_echelon
from ..partitions import Partition, partitions_of
from ..wronsk import gen_wronskian

__all__ = [
    "INFINITY",
    "LinearSystemP1",
    "RamificationDatum",
    "RamificationProfile",
    "wronskian_of_system",
    "order_partition_at",
    "ramification_profile",
    "base_locus",
    "annihilator_residual",
    "potow_values",
    "taylor_tuple",
    "format_point",
    "parse_point",
]


class _Infinity:
    """The point at infinity of the projective line."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __str__(self) -> str:
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


def format_point(p) -> str:
    return "inf" if p is INFINITY else format_rational(p)


def parse_point(text):
    if text is INFINITY or (isinstance(text, str) and text.strip().lower() in ("inf", "infinity", "oo")):
        return INFINITY
    if isinstance(text, str):
        return Fraction(text.strip())
    if isinstance(text, (int, Fraction)) and not isinstance(text, bool):
        return Fraction(text)
    raise DomainError(f"cannot read {text!r} as a point of P^1")


class LinearSystemP1:
    """An ``(r+1)``-dimensional space of polynomials of degree at most ``d``.

    The basis polynomials are affine-chart representatives of sections of
    ``O(d)``.  Coefficients may be rationals or elements of one number field.
    """

    __slots__ = ("d", "basis")

    def __init__(self, basis, d: int):
        basis = tuple(b if isinstance(b, UniPoly) else UniPoly(b) for b in basis)
        if not basis:
            raise DomainError("a linear system needs at least one basis element")
        if d < 0:
            raise DomainError("the degree bound must be nonnegative")
        for b in basis:
            if b.degree > d:
                raise DomainError(f"basis element of degree {b.degree} exceeds d = {d}")
        self.d = d
        self.basis = basis
        if rank(self.coefficient_matrix()) != len(basis):
            raise DegenerateSystemError("the basis polynomials are linearly dependent")

    @property
    def r(self) -> int:
        return len(self.basis) - 1

    def coefficient_matrix(self) -> list[list]:
        return [b.padded(self.d + 1) for b in self.basis]

    def canonical_basis(self) -> tuple[UniPoly, ...]:
        """Reduced echelon basis with pivots at the highest degrees, sorted by degree."""
        rows, pivots = row_echelon(self.coefficient_matrix(), range(self.d, -1, -1))
        polys = [UniPoly(row) for row in rows]
        return tuple(sorted(polys, key=lambda p: p.degree))

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearSystemP1):
            return NotImplemented
        return self.d == other.d and self.canonical_basis() == other.canonical_basis()

    def __hash__(self) -> int:
        return hash((self.d, tuple(p.coeffs for p in self.canonical_basis())))

    def contains(self, g: UniPoly) -> bool:
        if g.degree > self.d:
            return False
        return rank(self.coefficient_matrix() + [g.padded(self.d + 1)]) == self.r + 1

    def number_field(self):
        """The number field of the coefficients, or None if they are all rational."""
        for b in self.basis:
            for c in b.coeffs:
                if isinstance(c, NumberFieldElement):
                    return c.field
        return None

    def __repr__(self) -> str:
        polys = ", ".join(b.format() for b in self.basis)
        K = self.number_field()
        tail = "" if K is None else f"; {K!r}"
        return f"LinearSystemP1(d={self.d}, span({polys}){tail})"

    # JSON ------------------------------------------------------------------

    def to_json(self) -> dict:
        out = {
            "d": self.d,
            "basis": [[coeff_text(c) for c in b.padded(self.d + 1)] for b in self.basis],
        }
        K = self.number_field()
        if K is not None:
            out["field"] = {
                "generator": K.name,
                "modulus": [format_rational(c) for c in K.modulus.coeffs],
                "root_approx": [mpmath.nstr(mpmath.re(K.root), 20), mpmath.nstr(mpmath.im(K.root), 20)],
            }
        return out

    @classmethod
    def from_json(cls, data: dict) -> LinearSystemP1:
        try:
            d = int(data["d"])
            basis = [UniPoly([Fraction(str(c)) for c in row]) for row in data["basis"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed linear system: {exc}") from exc
        return cls(basis, d)


def coeff_text(c) -> str:
    """Lossless text for a rational or number-field coefficient."""
    if isinstance(c, NumberFieldElement):
        return str(c)
    return format_rational(c)


def wronskian_of_system(V: LinearSystemP1) -> UniPoly:
    """``det(D^k v_j)`` in the affine chart."""
    n = V.r + 1
    rows = [[b.derivative(k) for b in V.basis] for k in range(n)]
    w = det(rows) if n > 1 else rows[0][0]
    if not isinstance(w, UniPoly):
        w = UniPoly((w,))
    if not w:
        raise DegenerateSystemError("the Wronskian vanishes identically")
    return _lower_to_rational(w)


def _lower_to_rational(w: UniPoly) -> UniPoly:
    """Bring a number-field Wronskian back to Q when it is a rational polynomial up to scale.

    A basis over a number field spans a rational system only up to an overall
    constant in the Wronskian, so the monic form is tried as well.
    """
    if not any(isinstance(c, NumberFieldElement) for c in w.coeffs):
        return w
    for cand in (w, w.monic()):
        if all(not isinstance(c, NumberFieldElement) or c.is_rational() for c in cand.coeffs):
            return UniPoly([c.to_rational() if isinstance(c, NumberFieldElement) else c for c in cand.coeffs])
    return w


@dataclass(frozen=True)
class RamificationDatum:
    """Vanishing orders ``i_0 < ... < i_r`` of ``V`` at a point and their partition."""

    point: object
    orders: tuple[int, ...]
    partition: Partition
    weight: int

    def to_json(self) -> dict:
        return {
            "point": format_point(self.point),
            "orders": list(self.orders),
            "partition": list(self.partition),
            "weight": self.weight,
        }


def _local_basis(V: LinearSystemP1, P) -> list[UniPoly]:
    if P is INFINITY:
        return [b.reversed_chart(V.d) for b in V.basis]
    return [b.taylor_shift(P) for b in V.basis]


def _orders_from_local(local: list[UniPoly], d: int) -> tuple[int, ...]:
    _, pivots = row_echelon([p.padded(d + 1) for p in local])
    return tuple(sorted(pivots))


def order_partition_at(V: LinearSystemP1, P) -> RamificationDatum:
    """Order sequence and partition ``(i_r - r, ..., i_1 - 1, i_0)`` of ``V`` at ``P``.

    The orders are the distinct vanishing orders attained by sections of ``V``,
    read off as pivot columns of the Taylor coefficient matrix at ``P``.  At
    infinity the chart ``x -> 1/x`` is used with degree-``d`` reversal.
    """
    P = parse_point(P) if not (P is INFINITY or isinstance(P, Fraction)) else P
    orders = _orders_from_local(_local_basis(V, P), V.d)
    r = V.r
    lam = Partition(orders[r - j] - (r - j) for j in range(r + 1))
    datum = RamificationDatum(P, orders, lam, lam.weight)
    W = wronskian_of_system(V)
    expected = (r + 1) * (V.d - r) - W.degree if P is INFINITY else W.root_multiplicity(P)
    if expected != datum.weight:
        raise AssertionError(
            f"order partition weight {datum.weight} at {format_point(P)} differs from the Wronskian order {expected}"
        )
    return datum


@dataclass(frozen=True)
class RamificationProfile:
    """Rational ramification points plus the degree of the irrational remainder.

    ``irrational_degree`` counts the roots of the Wronskian that are not rational,
    with multiplicity, so that the weights add up to ``(r+1)(d-r)`` exactly.
    """

    points: tuple[RamificationDatum, ...]
    irrational_degree: int
    irrational_squarefree_degree: int
    expected_total: int
    wronskian: UniPoly = field(repr=False)

    @property
    def total_weight(self) -> int:
        return sum(p.weight for p in self.points) + self.irrational_degree

    @property
    def balanced(self) -> bool:
        return self.total_weight == self.expected_total

    def to_json(self) -> dict:
        return {
            "points": [p.to_json() for p in self.points],
            "irrational_degree": self.irrational_degree,
            "irrational_squarefree_degree": self.irrational_squarefree_degree,
            "total_weight": self.total_weight,
            "expected_total": self.expected_total,
        }


def ramification_profile(V: LinearSystemP1) -> RamificationProfile:
    """All rational ramification points (with infinity last) and the irrational remainder."""
    W = wronskian_of_system(V)
    if V.number_field() is not None and any(isinstance(c, NumberFieldElement) for c in W.coeffs):
        raise DomainError("the Wronskian is not defined over Q; ramification profiles need rational points")
    points = []
    rest = W
    for z in W.rational_roots():
        datum = order_partition_at(V, z)
        points.append(datum)
        rest = rest.exact_div(UniPoly((-z, 1)) ** datum.weight)
    inf = order_partition_at(V, INFINITY)
    if inf.weight:
        points.append(inf)
    irr_sf = rest.squarefree_part().degree if rest.degree > 0 else 0
    return RamificationProfile(
        tuple(points), rest.degree, irr_sf, (V.r + 1) * (V.d - V.r), W
    )


def base_locus(V: LinearSystemP1) -> list[tuple[object, int]]:
    """Rational common zeros of the basis with multiplicity, and infinity if all degrees are below ``d``."""
    g = UniPoly()
    for b in V.basis:
        g = g.gcd(b) if g else b.monic()
    out: list[tuple[object, int]] = []
    if g.degree > 0:
        for z in g.rational_roots():
            out.append((z, g.root_multiplicity(z)))
    top = max(b.degree for b in V.basis)
    if top < V.d:
        out.append((INFINITY, V.d - top))
    return out


def taylor_tuple(V: LinearSystemP1, P, N: int | None = None) -> list[Series]:
    """Ordinary Taylor series of the basis at ``P`` (or in the chart at infinity)."""
    local = _local_basis(V, P)
    N = V.d if N is None else N
    return [Series.from_poly(p.padded(V.d + 1), N, ORDINARY) for p in local]


def potow_values(V: LinearSystemP1, P) -> dict[Partition, object]:
    """``W_mu`` of the local Taylor data at ``P`` for every ``|mu| <= |lambda(P)|``.

    Only ``mu`` with at most ``r + 1`` parts enter.  At a ramification point all of
    these vanish except ``W_{lambda(P)}``.
    """
    lam = order_partition_at(V, P).partition
    r = V.r
    N = max(V.d, r + lam.weight)
    v = taylor_tuple(V, P, N)
    out = {}
    for w in range(lam.weight + 1):
        for mu in partitions_of(w, max_parts=r + 1):
            out[mu] = gen_wronskian(mu, v)[0]
    return out


def annihilator_residual(V: LinearSystemP1, g, at=0):
    """``E_V(g)``: the bordered Wronskian with first column ``(g, Dg, ..., D^{r+1} g)``.

    ``g`` is a polynomial (checked in the affine chart) or an ordinary series
    centred at ``at``, in which case the basis is expanded at the same point.
    """
    n = V.r + 2
    if isinstance(g, UniPoly):
        rows = [[g.derivative(k)] + [b.derivative(k) for b in V.basis] for k in range(n)]
        value = det(rows)
        return value if isinstance(value, UniPoly) else UniPoly((value,))
    if not isinstance(g, Series):
        raise DomainError("annihilator_residual takes a UniPoly or a Series")
    g = g.to_ordinary()
    if g.N < n - 1:
        raise DomainError(f"series known to order {g.N}, need at least {n - 1}")
    basis = taylor_tuple(V, Fraction(at), g.N)
    M = g.N - (n - 1)
    cols = [g] + basis
    rows = [[s.derive(k).truncate(M) for s in cols] for k in range(n)]
    value = det_cofactor(rows)
    return value if isinstance(value, Series) else Series.zero(M) + value
