"""Truncated formal power series in one variable ``t``.

A :class:`Series` stores the coefficients ``c_0 .. c_N`` of a power series
known modulo ``t**(N+1)`` together with a convention flag:

* ``ORDINARY``: the series is ``sum c_n t**n``;
* ``EXPONENTIAL``: the series is ``sum c_n t**n / n!``.

Under the exponential convention differentiation is an index shift and
multiplication is the binomial convolution.  Mixing conventions in one
operation raises, because silently combining them gives wrong answers that
still look plausible.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from ..errors import DomainError, InversionError

__all__ = ["Series", "ORDINARY", "EXPONENTIAL"]

ORDINARY = "ordinary"
EXPONENTIAL = "exponential"


def _coerce(c):
    if isinstance(c, bool):
        raise TypeError("booleans are not series coefficients")
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, float):
        raise TypeError("float coefficients are not allowed in exact series")
    return c


def unit_inverse(c):
    """Inverse of a ring element, or :class:`InversionError` if it is not a unit."""
    if isinstance(c, (int, Fraction)):
        if not c:
            raise InversionError("constant term 0 is not invertible")
        return 1 / Fraction(c)
    try:
        return 1 / c
    except (ZeroDivisionError, InversionError) as exc:
        raise InversionError(f"constant term {c} is not a unit") from exc


class Series:
    __slots__ = ("coeffs", "convention")

    def __init__(self, coeffs, convention: str = ORDINARY):
        if convention not in (ORDINARY, EXPONENTIAL):
            raise DomainError(f"unknown series convention {convention!r}")
        cs = tuple(_coerce(c) for c in coeffs)
        if not cs:
            raise DomainError("a series needs at least its constant coefficient")
        self.coeffs = cs
        self.convention = convention

    @classmethod
    def zero(cls, N: int, convention: str = ORDINARY) -> Series:
        return cls([0] * (N + 1), convention)

    @classmethod
    def one(cls, N: int, convention: str = ORDINARY) -> Series:
        return cls([1] + [0] * N, convention)

    @classmethod
    def from_poly(cls, coeffs, N: int, convention: str = ORDINARY) -> Series:
        """Truncate a finite ascending coefficient list to order ``N``."""
        cs = list(coeffs)[: N + 1]
        cs += [0] * (N + 1 - len(cs))
        return cls(cs, convention)

    @property
    def N(self) -> int:
        """Truncation order: coefficients of ``t**0 .. t**N`` are known."""
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def constant(self):
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def first_nonzero(self) -> int | None:
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return None

    def truncate(self, N: int) -> Series:
        if N > self.N:
            raise DomainError(f"cannot extend a series known to order {self.N} to {N}")
        return Series(self.coeffs[: N + 1], self.convention)

    def map(self, fn) -> Series:
        return Series([fn(c) for c in self.coeffs], self.convention)

    def __repr__(self) -> str:
        tag = "" if self.convention == ORDINARY else ", exponential"
        return f"Series({list(self.coeffs)!r}{tag})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.convention == other.convention and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.convention, self.coeffs))

    # conversion -----------------------------------------------------------

    def to_ordinary(self) -> Series:
        if self.convention == ORDINARY:
            return self
        return Series([c / factorial(n) if n > 1 else c for n, c in enumerate(self.coeffs)])

    def to_exponential(self) -> Series:
        if self.convention == EXPONENTIAL:
            return self
        return Series(
            [c * factorial(n) for n, c in enumerate(self.coeffs)], EXPONENTIAL
        )

    # arithmetic -----------------------------------------------------------

    def _check(self, other: Series) -> int:
        if self.convention != other.convention:
            raise DomainError(
                f"cannot combine {self.convention} and {other.convention} series"
            )
        return min(self.N, other.N)

    def __add__(self, other):
        if isinstance(other, Series):
            N = self._check(other)
            return Series([a + b for a, b in zip(self.coeffs[: N + 1], other.coeffs)], self.convention)
        try:
            c = _coerce(other)
        except TypeError:
            return NotImplemented
        return Series((self.coeffs[0] + c,) + self.coeffs[1:], self.convention)

    __radd__ = __add__

    def __neg__(self) -> Series:
        return Series([-c for c in self.coeffs], self.convention)

    def __sub__(self, other):
        if isinstance(other, Series):
            return self + (-other)
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Series):
            try:
                c = _coerce(other)
            except TypeError:
                return NotImplemented
            return Series([a * c for a in self.coeffs], self.convention)
        N = self._check(other)
        a, b = self.coeffs, other.coeffs
        out = []
        exp = self.convention == EXPONENTIAL
        for n in range(N + 1):
            acc = 0
            for k in range(n + 1):
                x, y = a[k], b[n - k]
                if not x or not y:
                    continue
                term = x * y
                if exp:
                    w = comb(n, k)
                    if w != 1:
                        term = term * w
                acc = acc + term
            out.append(acc)
        return Series(out, self.convention)

    def __rmul__(self, other):
        try:
            c = _coerce(other)
        except TypeError:
            return NotImplemented
        return Series([c * a for a in self.coeffs], self.convention)

    def __pow__(self, n: int) -> Series:
        if n < 0:
            return self.invert() ** (-n)
        result = Series.one(self.N, self.convention)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * other.invert()
        return self * unit_inverse(_coerce(other))

    def invert(self) -> Series:
        """Multiplicative inverse to the same truncation order."""
        inv0 = unit_inverse(self.coeffs[0])
        a = self.coeffs
        out = [inv0]
        exp = self.convention == EXPONENTIAL
        for n in range(1, self.N + 1):
            acc = 0
            for k in range(1, n + 1):
                if not a[k]:
                    continue
                term = a[k] * out[n - k]
                if exp:
                    term = term * comb(n, k)
                acc = acc + term
            out.append(-(acc * inv0))
        return Series(out, self.convention)

    # calculus -------------------------------------------------------------

    def derive(self, k: int = 1) -> Series:
        """k-th formal derivative; truncation order drops by ``k``."""
        if k > self.N:
            raise DomainError(f"a series known to order {self.N} has no derivative of order {k}")
        if k == 0:
            return self
        if self.convention == EXPONENTIAL:
            return Series(self.coeffs[k:], EXPONENTIAL)
        out = []
        for n in range(self.N + 1 - k):
            w = 1
            for j in range(n + 1, n + k + 1):
                w *= j
            out.append(self.coeffs[n + k] * w)
        return Series(out, ORDINARY)

    def integrate(self) -> Series:
        """Formal antiderivative with zero constant term; truncation grows by one."""
        if self.convention == EXPONENTIAL:
            return Series((Fraction(0),) + self.coeffs, EXPONENTIAL)
        return Series([0] + [c / (n + 1) for n, c in enumerate(self.coeffs)], ORDINARY)

    def shift_up(self, k: int) -> Series:
        """Multiply an ordinary series by ``t**k`` (keeps the truncation order)."""
        if self.convention != ORDINARY:
            raise DomainError("shift_up is defined for ordinary series only")
        return Series(([0] * k + list(self.coeffs))[: self.N + 1], ORDINARY)
