"""Left ideals of A[x_1..x_n] for a finite-dimensional algebra A."""

from .algpoly import AlgPoly, left_mul_terms, parse_algpoly, parse_algpolys
from .directional import DirectionalPoint, directional_ideal, evaluate, kills
from .ideal import LeftIdeal, contains, generate
from .quotient import (FiniteQuotient, is_maximal_left, is_prime_left_witnessed,
                       is_semiprime_left_witnessed)
from .transport import AlgebraMorphism, quotient_morphism, transport

__all__ = [
    "AlgPoly", "left_mul_terms", "parse_algpoly", "parse_algpolys", "DirectionalPoint",
    "directional_ideal", "evaluate", "kills", "LeftIdeal", "contains", "generate",
    "FiniteQuotient", "is_maximal_left", "is_prime_left_witnessed",
    "is_semiprime_left_witnessed", "AlgebraMorphism", "quotient_morphism", "transport",
]
