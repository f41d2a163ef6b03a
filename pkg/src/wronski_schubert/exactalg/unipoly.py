"""Dense univariate polynomials over an exact coefficient ring.

Coefficients are stored in ascending order (index = power of ``x``) with no
trailing zeros, so the zero polynomial has an empty coefficient tuple.  Integer
coefficients are promoted to :class:`Fraction`; any other coefficient type
(number-field elements, multivariate polynomials) is used as given, as long as
it supports ``+ - *`` and, for division, ``/`` by the leading coefficient.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd, lcm

import mpmath

from ..errors import DomainError
from .rational import format_rational

__all__ = ["UniPoly"]


def _coerce(c):
    if isinstance(c, bool):
        raise TypeError("booleans are not polynomial coefficients")
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, float):
        raise TypeError("float coefficients are not allowed in exact polynomials")
    if isinstance(c, str):
        return Fraction(c)
    return c


def _div_lead(c, lead):
    if lead == 1:
        return c
    return c / lead


class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    # construction ---------------------------------------------------------

    @classmethod
    def x(cls) -> UniPoly:
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> UniPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> UniPoly:
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots, lead=1) -> UniPoly:
        p = cls((lead,))
        for a in roots:
            p = p * cls((-_coerce(a), 1))
        return p

    # basic properties -----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == UniPoly((other,)).coeffs

    def __hash__(self) -> int:
        return hash(("UniPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"UniPoly({self})"

    def __str__(self) -> str:
        return self.format()

    def format(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if isinstance(c, Fraction):
                neg = c < 0
                mag = -c if neg else c
                cstr = format_rational(mag)
                if k and mag == 1:
                    cstr = ""
            else:
                neg = False
                cstr = f"({c})"
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            term = cstr + ("*" if cstr and mono else "") + mono
            if not parts:
                parts.append(("-" if neg else "") + term)
            else:
                parts.append((" - " if neg else " + ") + term)
        return "".join(parts)

    # ring operations ------------------------------------------------------

    def _lift(self, other) -> UniPoly | None:
        if isinstance(other, UniPoly):
            return other
        try:
            return UniPoly((other,))
        except TypeError:
            return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            try:
                c = _coerce(other)
            except TypeError:
                return NotImplemented
            return UniPoly([a * c for a in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return UniPoly(out)

    def __rmul__(self, other):
        try:
            c = _coerce(other)
        except TypeError:
            return NotImplemented
        return UniPoly([c * a for a in self.coeffs])

    def __pow__(self, n: int) -> UniPoly:
        if n < 0:
            raise DomainError("negative powers of polynomials are not defined")
        result = UniPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, UniPoly):
            return self.exact_div(other)
        c = _coerce(other)
        return UniPoly([a / c for a in self.coeffs])

    def __divmod__(self, other: UniPoly):
        if not isinstance(other, UniPoly):
            other = UniPoly((other,))
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.lc
        if len(rem) - 1 < db:
            return UniPoly(), UniPoly(rem)
        quo = [0] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db]
            if not c:
                continue
            q = _div_lead(c, lead)
            quo[k] = q
            for i, b in enumerate(other.coeffs):
                rem[k + i] = rem[k + i] - q * b
        return UniPoly(quo), UniPoly(rem[:db] if db > 0 else ())

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: UniPoly) -> UniPoly:
        q, r = divmod(self, other)
        if r:
            raise DomainError(f"{other} does not divide {self}")
        return q

    def divides(self, other: UniPoly) -> bool:
        return not (other % self)

    # calculus and evaluation ---------------------------------------------

    def derivative(self, k: int = 1) -> UniPoly:
        cs = self.coeffs
        for _ in range(k):
            cs = tuple(i * c for i, c in enumerate(cs) if i)
        return UniPoly(cs)

    def integral(self) -> UniPoly:
        return UniPoly([0] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def taylor_shift(self, a) -> UniPoly:
        """Coefficients of ``f(x + a)``, i.e. the Taylor expansion at ``a``."""
        n = len(self.coeffs)
        out = [0] * n
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            apow = 1
            for j in range(k, -1, -1):
                out[j] = out[j] + comb(k, j) * c * apow
                apow = apow * a
        return UniPoly(out)

    def reversed_chart(self, d: int) -> UniPoly:
        """``x**d * f(1/x)``: the section of O(d) seen from the chart at infinity."""
        if self.degree > d:
            raise DomainError(f"degree {self.degree} exceeds the bound {d}")
        cs = list(self.coeffs) + [0] * (d + 1 - len(self.coeffs))
        return UniPoly(cs[::-1])

    def monic(self) -> UniPoly:
        return UniPoly([_div_lead(c, self.lc) for c in self.coeffs])

    def padded(self, n: int) -> list:
        return list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))

    # field-only algorithms (coefficients in Q or a number field) -----------

    def gcd(self, other: UniPoly) -> UniPoly:
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic() if a else a

    def squarefree_part(self) -> UniPoly:
        if self.degree < 1:
            return UniPoly((1,))
        return self.exact_div(self.gcd(self.derivative())).monic()

    def root_multiplicity(self, a) -> int:
        if not self:
            raise DomainError("the zero polynomial vanishes to infinite order")
        lin = UniPoly((-_coerce(a), 1))
        m, f = 0, self
        while True:
            q, r = divmod(f, lin)
            if r:
                return m
            m, f = m + 1, q

    def integer_primitive(self) -> tuple[int, ...]:
        """Scale a Q-polynomial to a primitive integer polynomial (positive lead)."""
        dens = lcm(*(Fraction(c).denominator for c in self.coeffs)) if self.coeffs else 1
        ints = [int(Fraction(c) * dens) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        g = g or 1
        if ints and ints[-1] < 0:
            g = -g
        return tuple(v // g for v in ints)

    def rational_roots(self, dps: int = 60) -> list[Fraction]:
        """Distinct rational roots, ascending. Coefficients must be rational.

        Candidates come from high-precision complex roots of the squarefree
        part and are each confirmed by exact evaluation.
        """
        if not self:
            raise DomainError("the zero polynomial has every number as a root")
        f = self.squarefree_part()
        roots: set[Fraction] = set()
        if not f[0]:
            roots.add(Fraction(0))
            f = f.exact_div(UniPoly.x())
        if f.degree < 1:
            return sorted(roots)
        ints = f.integer_primitive()
        lead = ints[-1]
        if f.degree == 1:
            roots.add(Fraction(-ints[0], ints[1]))
            return sorted(roots)
        with mpmath.workdps(dps):
            approx = mpmath.polyroots(list(reversed(ints)), maxsteps=400, extraprec=4 * dps)
            for z in approx:
                if abs(mpmath.im(z)) > mpmath.mpf(10) ** (-dps // 3) * (1 + abs(z)):
                    continue
                cand = Fraction(int(mpmath.nint(mpmath.re(z) * lead)), lead)
                if not f(cand):
                    roots.add(cand)
        return sorted(roots)
