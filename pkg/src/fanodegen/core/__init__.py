"""Exact coefficients, monomial orders, polynomials and their text grammar."""
from .field import QQ, PrimeField, RationalField, field_from_name
from .parse import parse_polynomial, parse_polynomials
from .poly import Polynomial, specialize
from .ring import (
    Cmp,
    Monomial,
    MonomialOrder,
    PolyRing,
    compare_monomials,
    elimination,
    grevlex,
    lex,
    parse_order,
    weight,
)

__all__ = [
    "QQ", "PrimeField", "RationalField", "field_from_name", "parse_polynomial",
    "parse_polynomials", "Polynomial", "specialize", "Cmp", "Monomial", "MonomialOrder",
    "PolyRing", "compare_monomials", "elimination", "grevlex", "lex", "parse_order", "weight",
]
