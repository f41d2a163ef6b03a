"""Simple algebraic number fields ``Q[X]/(m(X))`` with a chosen complex embedding.

Used to carry exact preimages of the Wronski map whose coordinates are not
rational.  The modulus must be irreducible over Q for division to work; the
embedding is a high-precision approximation of the root that ``X`` stands for.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath

from ..errors import DomainError, InversionError
from .rational import format_rational
from .unipoly import UniPoly

__all__ = ["NumberField", "NumberFieldElement"]


class NumberField:
    def __init__(self, modulus: UniPoly, root, name: str = "a"):
        if modulus.degree < 1:
            raise DomainError("a number field needs a modulus of degree at least 1")
        self.modulus = modulus.monic()
        self.root = mpmath.mpc(root)
        self.name = name

    @property
    def degree(self) -> int:
        return self.modulus.degree

    def __call__(self, value) -> NumberFieldElement:
        if isinstance(value, NumberFieldElement):
            return value
        if isinstance(value, UniPoly):
            return NumberFieldElement(self, value)
        return NumberFieldElement(self, UniPoly((value,)))

    def gen(self) -> NumberFieldElement:
        return NumberFieldElement(self, UniPoly.x())

    def __eq__(self, other) -> bool:
        """Same modulus and the same embedding (roots agree to 30 digits)."""
        if self is other:
            return True
        if not isinstance(other, NumberField):
            return NotImplemented
        if self.modulus != other.modulus:
            return False
        with mpmath.workdps(40):
            return abs(self.root - other.root) < mpmath.mpf(10) ** -30 * (1 + abs(self.root))

    def __hash__(self) -> int:
        return hash(("NumberField", self.modulus.coeffs))

    def __repr__(self) -> str:
        return f"NumberField({self.modulus.format(self.name)} = 0, {self.name} ~ {mpmath.nstr(self.root, 12)})"


class NumberFieldElement:
    __slots__ = ("field", "poly")

    def __init__(self, field: NumberField, poly: UniPoly):
        self.field = field
        self.poly = poly % field.modulus if poly.degree >= field.degree else poly

    def _other(self, other):
        if isinstance(other, NumberFieldElement):
            if other.field is not self.field and other.field != self.field:
                raise DomainError("elements of different number fields cannot be combined")
            return other.poly
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return UniPoly((other,))
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return NumberFieldElement(self.field, self.poly + o)

    __radd__ = __add__

    def __neg__(self):
        return NumberFieldElement(self.field, -self.poly)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return NumberFieldElement(self.field, self.poly - o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return NumberFieldElement(self.field, o - self.poly)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return NumberFieldElement(self.field, self.poly * o)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = NumberFieldElement(self.field, UniPoly((1,)))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> NumberFieldElement:
        # extended Euclid on (poly, modulus)
        if not self.poly:
            raise InversionError("zero has no inverse")
        r0, r1 = self.field.modulus, self.poly
        s0, s1 = UniPoly(), UniPoly((1,))
        while r1:
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        if r0.degree != 0:
            raise InversionError("modulus is reducible; element is a zero divisor")
        return NumberFieldElement(self.field, s0 / r0.lc)

    def __truediv__(self, other):
        if isinstance(other, NumberFieldElement):
            return self * other.inverse()
        o = self._other(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero")
        return NumberFieldElement(self.field, self.poly / o.lc)

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __bool__(self) -> bool:
        return bool(self.poly)

    def __eq__(self, other) -> bool:
        if isinstance(other, NumberFieldElement) and other.field != self.field:
            # different embeddings: equal only if both are the same rational number
            return self.is_rational() and other.is_rational() and self.poly == other.poly
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.poly == o

    def __hash__(self) -> int:
        if self.poly.degree <= 0:
            return hash(self.poly[0])
        return hash(("nf", self.poly.coeffs))

    def is_rational(self) -> bool:
        return self.poly.degree <= 0

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise DomainError(f"{self} is not rational")
        return self.poly[0]

    def approx(self, dps: int = 30):
        with mpmath.workdps(dps):
            return self.poly(self.field.root)

    def __complex__(self) -> complex:
        return complex(self.approx())

    def __repr__(self) -> str:
        return str(self)

    def __str__(self) -> str:
        if self.poly.degree <= 0:
            return format_rational(self.poly[0])
        return self.poly.format(self.field.name)
