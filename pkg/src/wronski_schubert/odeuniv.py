"""The universal Cauchy problem for linear ODEs with constant coefficients.

The operator ``P(D) = D^{r+1} - e_1 D^r + ... + (-1)^{r+1} e_{r+1}`` acts on
power series in ``t``.  Solutions are returned in the exponential convention,
``g = sum p_n t^n / n!``, so that ``D^n g(0) = p_n``.  The numbers ``p_n`` are the
ordinary coefficients of the rational series

    (U_0(b) + U_1(b) t + ... + U_r(b) t^r + sum_{n>=r+1} f_{n-r-1} t^n)
    / (1 - e_1 t + ... + (-1)^{r+1} e_{r+1} t^{r+1}),

where ``b`` is the initial data, ``U_i(a) = a_i - e_1 a_{i-1} + ... + (-1)^i e_i a_0``
and ``f_m`` are the exponential coefficients of the forcing term.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .exactalg import EXPONENTIAL, MultiPoly, Series
from .schur import CoeffSequence, e_generators, e_names, h_from_e

__all__ = [
    "MonicOperator",
    "CauchyData",
    "u_transform",
    "solve_cauchy",
    "recurrence_solution",
    "fundamental_basis",
    "fundamental_initial_data",
    "apply_operator",
    "universal_cauchy",
    "specialize_series",
]


class MonicOperator:
    """``T^{r+1} - e_1 T^r + ... + (-1)^{r+1} e_{r+1}`` with ``e_i`` in a ring."""

    __slots__ = ("coeffs", "_universal")

    def __init__(self, coeffs):
        cs = tuple(coeffs)
        if not cs:
            raise DomainError("an operator needs at least one coefficient (order >= 1)")
        for c in cs:
            if isinstance(c, float):
                raise TypeError("float operator coefficients are not allowed")
        self.coeffs = cs
        self._universal = False

    @classmethod
    def universal(cls, r: int) -> MonicOperator:
        """The operator over ``E_r = Q[e_1, ..., e_{r+1}]``."""
        op = cls(e_generators(r))
        op._universal = True
        return op

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def r(self) -> int:
        return len(self.coeffs) - 1

    def e(self, k: int):
        """``e_k`` with ``e_0 = 1`` and ``e_k = 0`` outside ``0..r+1``."""
        if k == 0:
            return 1
        if 1 <= k <= self.order:
            return self.coeffs[k - 1]
        return 0

    def h(self, n_max: int) -> CoeffSequence:
        """``h_0 .. h_{n_max}`` of this operator's coefficients."""
        if self._universal:
            return h_from_e(self.r, n_max)
        return h_from_e(self.r, n_max, self.coeffs)

    def denominator(self, N: int) -> Series:
        """``1 - e_1 t + ... + (-1)^{r+1} e_{r+1} t^{r+1}`` as an ordinary series."""
        cs = [(-1) ** k * self.e(k) for k in range(self.order + 1)]
        return Series.from_poly(cs, N)

    def __str__(self) -> str:
        parts = [f"T^{self.order}"]
        for k in range(1, self.order + 1):
            c = self.e(k)
            power = self.order - k
            mono = "" if power == 0 else ("*T" if power == 1 else f"*T^{power}")
            sign = "-" if k % 2 else "+"
            parts.append(f" {sign} ({c}){mono}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"MonicOperator({self})"


@dataclass(frozen=True)
class CauchyData:
    """``P(D) y = phi`` with ``D^i y(0) = b_i``, solved to order ``N``.

    ``forcing`` is an exponential-convention series (coefficients ``phi_m = D^m phi(0)``)
    or ``None`` for the homogeneous problem.
    """

    operator: MonicOperator
    init: tuple
    forcing: Series | None
    N: int

    def __post_init__(self):
        object.__setattr__(self, "init", tuple(self.init))
        if len(self.init) != self.operator.order:
            raise DomainError(
                f"need {self.operator.order} initial values, got {len(self.init)}"
            )
        if self.N < self.operator.order:
            raise DomainError(f"truncation N={self.N} is below the order {self.operator.order}")
        if self.forcing is not None:
            if self.forcing.convention != EXPONENTIAL:
                raise DomainError("forcing must be given in the exponential convention")
            need = self.N - self.operator.order
            if self.forcing.N < need:
                raise DomainError(f"forcing known to order {self.forcing.N}, need {need}")


def u_transform(a, op: MonicOperator) -> list:
    """``U_i(a) = a_i - e_1 a_{i-1} + ... + (-1)^i e_i a_0`` for ``i = 0..r``."""
    a = list(a)
    if len(a) != op.order:
        raise DomainError(f"expected {op.order} values, got {len(a)}")
    out = []
    for i in range(op.order):
        acc = a[i]
        for k in range(1, i + 1):
            term = op.e(k) * a[i - k]
            acc = acc - term if k % 2 else acc + term
        out.append(acc)
    return out


def _numerator(data: CauchyData) -> list:
    op = data.operator
    num = u_transform(data.init, op)
    for n in range(op.order, data.N + 1):
        m = n - op.order
        num.append(data.forcing[m] if data.forcing is not None else 0)
    return num


def solve_cauchy(data: CauchyData) -> Series:
    """The unique solution, as exponential coefficients ``p_0 .. p_N``."""
    op = data.operator
    h = op.h(data.N)
    num = _numerator(data)
    # multiply the numerator by 1/(1 - e_1 t + ...) = sum h_n t^n
    p = []
    for n in range(data.N + 1):
        acc = 0
        for k in range(n + 1):
            if num[k] and h[n - k]:
                acc = acc + num[k] * h[n - k]
        p.append(acc)
    return Series(p, EXPONENTIAL)


def recurrence_solution(data: CauchyData) -> Series:
    """Independent oracle: run ``p_{n+r+1} = e_1 p_{n+r} - ... + phi_n`` forward."""
    op = data.operator
    p = list(data.init)
    while len(p) <= data.N:
        m = len(p) - op.order
        acc = data.forcing[m] if data.forcing is not None else 0
        for k in range(1, op.order + 1):
            term = op.e(k) * p[-k]
            acc = acc + term if k % 2 else acc - term
        p.append(acc)
    return Series(p, EXPONENTIAL)


def fundamental_initial_data(op: MonicOperator, i: int) -> list:
    """``(0, ..., 0, 1, h_1, ..., h_{r-i})`` with the 1 in position ``i``."""
    if not 0 <= i <= op.r:
        raise DomainError(f"index {i} outside 0..{op.r}")
    h = op.h(op.r)
    return [0] * i + [h[j] for j in range(op.r - i + 1)]


def fundamental_basis(op: MonicOperator, N: int) -> list[Series]:
    """``u_0 .. u_r``: ``u_i`` has exponential coefficients ``h_{n-i}``."""
    if N < op.order:
        raise DomainError(f"truncation N={N} is below the order {op.order}")
    h = op.h(N)
    return [Series([h[n - i] for n in range(N + 1)], EXPONENTIAL) for i in range(op.order)]


def apply_operator(op: MonicOperator, s: Series) -> Series:
    """``P(D) s``; the truncation order drops by the order of ``P``."""
    if s.N < op.order:
        raise DomainError(f"series known to order {s.N}, operator has order {op.order}")
    M = s.N - op.order
    total = s.derive(op.order).truncate(M)
    for k in range(1, op.order + 1):
        term = s.derive(op.order - k).truncate(M) * op.e(k)
        total = total - term if k % 2 else total + term
    return total


def universal_cauchy(r: int, N: int, forcing: bool = True) -> CauchyData:
    """Cauchy data over ``Q[e_1..e_{r+1}, x_0..x_r, f_0..f_{N-r-1}]``.

    Only the forcing generators reachable at truncation ``N`` are created.
    """
    nf = N - r if forcing else 0
    names = e_names(r) + tuple(f"x_{i}" for i in range(r + 1)) + tuple(f"f_{m}" for m in range(nf))
    gen = {n: MultiPoly.gen(n, names) for n in names}
    op = MonicOperator([gen[n] for n in e_names(r)])
    init = [gen[f"x_{i}"] for i in range(r + 1)]
    phi = Series([gen[f"f_{m}"] for m in range(nf)], EXPONENTIAL) if forcing else None
    return CauchyData(op, init, phi, N)


def specialize_series(s: Series, values: dict) -> Series:
    """Substitute values for generators in every coefficient of ``s``."""
    return s.map(lambda c: c.subs(values) if isinstance(c, MultiPoly) else c)
