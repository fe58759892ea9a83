from .algebra import (FinDimAlgebra, algebra_from_json, cyclic_group_algebra, dual_numbers,
                      matrix_algebra, monogenic, preset, upper_triangular)
from .ideals import (LeftIdealFD, Verdict, ann_maximal_check, center_intersection,
                     double_annihilator_check, ideal_quotient, is_field, is_maximal_left,
                     is_prime_left, is_prime_submodule, is_semiprime_left, is_semiprime_submodule,
                     is_simple_module, left_ideals, maximal_left_ideals, maximal_two_sided_ideals,
                     perp, two_sided_ideals)
from .structure import (DualBasisData, RadicalQuotient, SimpleFactor, WedderburnData,
                        element_minpoly, is_semisimple, radical, trace_form, wedderburn,
                        xi_preimage)

__all__ = [
    "FinDimAlgebra", "algebra_from_json", "cyclic_group_algebra", "dual_numbers",
    "matrix_algebra", "monogenic", "preset", "upper_triangular", "LeftIdealFD", "Verdict",
    "ann_maximal_check", "center_intersection", "double_annihilator_check", "ideal_quotient",
    "is_field", "is_maximal_left", "is_prime_left", "is_prime_submodule", "is_semiprime_left",
    "is_semiprime_submodule", "is_simple_module", "left_ideals", "maximal_left_ideals",
    "maximal_two_sided_ideals", "perp", "two_sided_ideals", "DualBasisData", "RadicalQuotient",
    "SimpleFactor", "WedderburnData", "element_minpoly", "is_semisimple", "radical",
    "trace_form", "wedderburn", "xi_preimage",
]
