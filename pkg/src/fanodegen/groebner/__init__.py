"""Groebner bases and the commutative algebra built on them."""
from .hilbert import HilbertData, hilbert_data, hilbert_function, hilbert_series_monomial
from .ideal import (
    DEFAULT_MAX_PAIRS,
    Ideal,
    ReducedGroebnerBasis,
    contains,
    eliminate,
    groebner_basis,
    ideal_membership,
    ideals_equal,
    initial_form_ideal,
    initial_ideal,
    intersect,
    krull_dimension,
    normal_form,
    quotient,
    radical_membership,
    saturate,
)
from .primes import minimal_primes_monomial
from .syzygy import SyzygyModule, check_syzygy, syzygies

__all__ = [
    "HilbertData", "hilbert_data", "hilbert_function", "hilbert_series_monomial",
    "DEFAULT_MAX_PAIRS", "Ideal", "ReducedGroebnerBasis", "contains", "eliminate",
    "groebner_basis", "ideal_membership", "ideals_equal", "initial_form_ideal",
    "initial_ideal", "intersect", "krull_dimension", "normal_form", "quotient",
    "radical_membership", "saturate", "minimal_primes_monomial", "SyzygyModule",
    "check_syzygy", "syzygies",
]
