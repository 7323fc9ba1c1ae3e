"""Exact Riordan-array toolkit: power series, halves, Hankel transforms."""

from .errors import (
    CatalogError, DomainError, ParseError, PrecisionError, RiordanError,
    SequenceLengthError, UnknownIdentifierError, ValidationError,
)
from .expr import evaluate, parse_gf, to_text
from .halves import (
    halves_pair, horizontal_half_matrix, horizontal_half_pair,
    vertical_half_matrix, vertical_half_pair,
)
from .hankel import bareiss_det, hankel_transform
from .riordan import RiordanPair, Triangle, inverse, multiply
from .series import Series, catalan

__version__ = "0.1.0"

__all__ = [
    "CatalogError", "DomainError", "ParseError", "PrecisionError", "RiordanError",
    "SequenceLengthError", "UnknownIdentifierError", "ValidationError",
    "evaluate", "parse_gf", "to_text",
    "halves_pair", "horizontal_half_matrix", "horizontal_half_pair",
    "vertical_half_matrix", "vertical_half_pair",
    "bareiss_det", "hankel_transform",
    "RiordanPair", "Triangle", "inverse", "multiply",
    "Series", "catalan",
]
