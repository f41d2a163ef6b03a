"""Exact arithmetic: rationals, polynomials, truncated series, determinants."""

from .elimination import discriminant, resultant, sylvester_matrix
from .linalg import det, det_bareiss, det_cofactor, rank, row_echelon
from .multipoly import MultiPoly, generators
from .numberfield import NumberField, NumberFieldElement
from .rational import Fraction, format_rational, parse_rational, to_rational
from .series import EXPONENTIAL, ORDINARY, Series
from .unipoly import UniPoly


def series_invert(s: Series) -> Series:
    return s.invert()


def series_derive(s: Series, k: int = 1) -> Series:
    return s.derive(k)


def series_integrate(s: Series) -> Series:
    return s.integrate()


__all__ = [
    "EXPONENTIAL",
    "Fraction",
    "MultiPoly",
    "NumberField",
    "NumberFieldElement",
    "ORDINARY",
    "Series",
    "UniPoly",
    "det",
    "det_bareiss",
    "det_cofactor",
    "discriminant",
    "format_rational",
    "generators",
    "parse_rational",
    "rank",
    "resultant",
    "row_echelon",
    "series_derive",
    "series_integrate",
    "series_invert",
    "sylvester_matrix",
    "to_rational",
]
