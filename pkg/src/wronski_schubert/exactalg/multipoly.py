"""Sparse multivariate polynomials with rational coefficients.

A polynomial carries an ordered tuple of generator names and a dict mapping
exponent vectors to coefficients.  Coefficients are ``int`` whenever they are
integral (the universal computations live in ``Z[e_1, ..., e_{r+1}]`` and
integer arithmetic is several times faster than ``Fraction``), otherwise
``Fraction``.  Polynomials in different generator sets can be combined; the
result lives in the ordered union of the two sets.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import DomainError, InversionError
from .rational import format_rational

__all__ = ["MultiPoly", "generators"]

_BITS = 20
_MASK = (1 << _BITS) - 1


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _scalar(c):
    if isinstance(c, bool):
        raise TypeError("booleans are not polynomial coefficients")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return _norm(c)
    return None


class MultiPoly:
    __slots__ = ("gens", "terms", "_hash")

    def __init__(self, gens=(), terms=None):
        self.gens = tuple(gens)
        n = len(self.gens)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n:
                raise DomainError(f"exponent vector {exps} does not match {n} generators")
            c = _norm(c)
            if c:
                clean[exps] = c
        self.terms = clean
        self._hash = None

    # construction ---------------------------------------------------------

    @classmethod
    def gen(cls, name: str, gens=None) -> MultiPoly:
        gens = tuple(gens) if gens is not None else (name,)
        if name not in gens:
            raise DomainError(f"{name} is not among the generators {gens}")
        exps = tuple(1 if g == name else 0 for g in gens)
        return cls(gens, {exps: 1})

    @classmethod
    def constant(cls, c, gens=()) -> MultiPoly:
        return cls(gens, {(0,) * len(tuple(gens)): c})

    # inspection -----------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * len(self.gens), 0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def coefficient(self, exps: dict[str, int]):
        key = tuple(exps.get(g, 0) for g in self.gens)
        extra = set(exps) - set(self.gens)
        if any(exps[g] for g in extra):
            return 0
        return self.terms.get(key, 0)

    def used_gens(self) -> tuple[str, ...]:
        return tuple(g for i, g in enumerate(self.gens) if any(e[i] for e in self.terms))

    # generator bookkeeping -----------------------------------------------

    def with_gens(self, gens) -> MultiPoly:
        gens = tuple(gens)
        if gens == self.gens:
            return self
        pos = {g: i for i, g in enumerate(gens)}
        for i, g in enumerate(self.gens):
            if g not in pos and any(e[i] for e in self.terms):
                raise DomainError(f"generator {g} is used and cannot be dropped")
        idx = [(pos[g], i) for i, g in enumerate(self.gens) if g in pos]
        out = {}
        for exps, c in self.terms.items():
            new = [0] * len(gens)
            for j, i in idx:
                new[j] = exps[i]
            out[tuple(new)] = c
        return MultiPoly(gens, out)

    def _align(self, other: MultiPoly):
        if self.gens == other.gens:
            return self, other
        merged = list(self.gens)
        merged += [g for g in other.gens if g not in self.gens]
        return self.with_gens(merged), other.with_gens(merged)

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            return self._align(other)
        c = _scalar(other)
        if c is None:
            return None
        return self, MultiPoly.constant(c, self.gens)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        pair = self._lift(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        out = dict(a.terms)
        for e, c in b.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(a.gens, out)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.gens, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        pair = self._lift(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        out = dict(a.terms)
        for e, c in b.terms.items():
            out[e] = out.get(e, 0) - c
        return MultiPoly(a.gens, out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        c = _scalar(other)
        if c is not None:
            if not c:
                return MultiPoly(self.gens)
            return MultiPoly(self.gens, {e: v * c for e, v in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._align(other)
        if not a.terms or not b.terms:
            return MultiPoly(a.gens)
        n = len(a.gens)
        da = [max(e[i] for e in a.terms) for i in range(n)]
        db = [max(e[i] for e in b.terms) for i in range(n)]
        if any(x + y > _MASK for x, y in zip(da, db)):
            return a._mul_tuples(b)
        # Pack exponent vectors into one integer so a monomial product is an add.
        pa = [(_pack(e), v) for e, v in a.terms.items()]
        pb = [(_pack(e), v) for e, v in b.terms.items()]
        acc: dict[int, object] = {}
        get = acc.get
        for ka, va in pa:
            for kb, vb in pb:
                k = ka + kb
                acc[k] = get(k, 0) + va * vb
        return MultiPoly(a.gens, {_unpack(k, n): v for k, v in acc.items()})

    def _mul_tuples(self, other: MultiPoly) -> MultiPoly:
        acc = {}
        for ea, va in self.terms.items():
            for eb, vb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                acc[e] = acc.get(e, 0) + va * vb
        return MultiPoly(self.gens, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> MultiPoly:
        if n < 0:
            raise DomainError("negative power of a polynomial")
        result = MultiPoly.constant(1, self.gens)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        c = _scalar(other)
        if c is not None:
            if not c:
                raise ZeroDivisionError("division of a polynomial by zero")
            return MultiPoly(self.gens, {e: Fraction(v) / c for e, v in self.terms.items()})
        if isinstance(other, MultiPoly) and other.is_constant():
            return self / other.constant_term()
        raise InversionError("only division by nonzero constants is supported")

    def __rtruediv__(self, other):
        if not self.is_constant() or not self:
            raise InversionError(f"{self} is not a unit")
        return MultiPoly.constant(Fraction(other) / Fraction(self.constant_term()), self.gens)

    # comparison -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            a, b = self._align(other)
            return a.terms == b.terms
        c = _scalar(other)
        if c is None:
            return NotImplemented
        if not c:
            return not self.terms
        return self.terms == {(0,) * len(self.gens): c}

    def __hash__(self) -> int:
        if self._hash is None:
            used = self.used_gens()
            red = self.with_gens(used)
            self._hash = hash((used, frozenset(red.terms.items())))
        return self._hash

    # evaluation -----------------------------------------------------------

    def subs(self, values: dict) -> object:
        """Substitute ring elements for some generators.

        Generators not in ``values`` stay symbolic.  The result is a scalar if
        nothing symbolic survives, otherwise a :class:`MultiPoly`.
        """
        keep = [g for g in self.gens if g not in values]
        keep_idx = [i for i, g in enumerate(self.gens) if g not in values]
        sub_idx = [(i, values[g]) for i, g in enumerate(self.gens) if g in values]
        powers: dict[tuple[int, int], object] = {}

        def power(i, v, k):
            key = (i, k)
            if key not in powers:
                powers[key] = v**k
            return powers[key]

        total = 0
        for exps, c in self.terms.items():
            term = c
            for i, v in sub_idx:
                if exps[i]:
                    term = term * power(i, v, exps[i])
            if keep:
                mono = MultiPoly(keep, {tuple(exps[i] for i in keep_idx): 1})
                term = mono * term
            total = total + term
        if isinstance(total, MultiPoly) and total.is_constant():
            return total.constant_term()
        return total

    # text -----------------------------------------------------------------

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"

        def key(item):
            e = item[0]
            return (-sum(e), tuple(-x for x in e))

        parts = []
        for exps, c in sorted(self.terms.items(), key=key):
            mono = "*".join(
                g if k == 1 else f"{g}^{k}" for g, k in zip(self.gens, exps) if k
            )
            neg = c < 0
            mag = -c if neg else c
            cstr = format_rational(mag)
            if mono and mag == 1:
                term = mono
            elif mono:
                term = f"{cstr}*{mono}"
            else:
                term = cstr
            if not parts:
                parts.append(("-" if neg else "") + term)
            else:
                parts.append((" - " if neg else " + ") + term)
        return "".join(parts)

    @classmethod
    def parse(cls, text: str, gens=None) -> MultiPoly:
        """Parse the output format of :meth:`__str__` back into a polynomial."""
        text = text.replace(" ", "")
        if text in ("", "0"):
            return cls(gens or ())
        tokens = re.findall(r"[+-]?[^+-]+", text)
        terms = []
        names: list[str] = list(gens or ())
        for tok in tokens:
            sign = -1 if tok.startswith("-") else 1
            tok = tok.lstrip("+-")
            coeff = Fraction(1)
            mono: dict[str, int] = {}
            for factor in tok.split("*"):
                if re.fullmatch(r"\d+(/\d+)?", factor):
                    coeff *= Fraction(factor)
                    continue
                name, _, power = factor.partition("^")
                mono[name] = mono.get(name, 0) + (int(power) if power else 1)
                if name not in names:
                    names.append(name)
            terms.append((sign * coeff, mono))
        out = {}
        for c, mono in terms:
            e = tuple(mono.get(g, 0) for g in names)
            out[e] = out.get(e, 0) + c
        return cls(names, out)


def _pack(exps) -> int:
    k = 0
    for i, e in enumerate(exps):
        k |= e << (_BITS * i)
    return k


def _unpack(k: int, n: int) -> tuple[int, ...]:
    return tuple((k >> (_BITS * i)) & _MASK for i in range(n))


def generators(*names: str) -> tuple[MultiPoly, ...]:
    """Return the generators of ``Q[names]`` as polynomials sharing one ring."""
    return tuple(MultiPoly.gen(n, names) for n in names)
