"""Polynomials, module Gröbner bases and point enumeration."""

from .groebner import (DEGREE_CAP, QuotientSpace, Submodule, annihilator, colon_unit, colon_vector,
                       eliminant, enumerate_points, groebner_terms, intersect_all,
                       intersect_submodules, is_zero_dimensional, kernel_submodule, module_groebner,
                       normal_form, quotient_dimension)
from .parse import (parse_expression, parse_modvector, parse_poly, parse_vector, tokenize,
                    variable_lookup)
from .poly import (DEFAULT_ORDER, ModVector, MPoly, degrevlex_key, divides, exp_add, exp_lcm,
                   exp_sub, format_monomial, format_terms, lex_key, term_key_function, var_names)
