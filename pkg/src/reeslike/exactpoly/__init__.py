"""Exact polynomial arithmetic over QQ and F_p with weighted gradings."""

from .fields import FF, QQ, Field, is_prime
from .matrix import PolyMatrix, block, field_rank, hstack, vstack
from .orders import MonomialOrder, elim, grevlex, lex, wlex
from .parser import parse_polynomial, split_generators
from .polynomial import (
    divide_exact,
    evaluate,
    homogeneous_components,
    is_homogeneous,
    max_weighted_degree,
    partial_derivative,
    substitute,
    weighted_degree,
)
from .ring import INHOMOGENEOUS, ZERO_DEGREE, GradedPolyRing, Polynomial, format_polynomial, normalize_name

__all__ = [
    "FF",
    "QQ",
    "Field",
    "is_prime",
    "PolyMatrix",
    "block",
    "field_rank",
    "hstack",
    "vstack",
    "MonomialOrder",
    "elim",
    "grevlex",
    "lex",
    "wlex",
    "parse_polynomial",
    "split_generators",
    "divide_exact",
    "evaluate",
    "homogeneous_components",
    "is_homogeneous",
    "max_weighted_degree",
    "partial_derivative",
    "substitute",
    "weighted_degree",
    "INHOMOGENEOUS",
    "ZERO_DEGREE",
    "GradedPolyRing",
    "Polynomial",
    "format_polynomial",
    "normalize_name",
]
