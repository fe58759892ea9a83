"""rad(I) for left ideals of A[x]: the structural pipeline, the geometric oracle, the
center correspondence and the finite-codimension check."""

from .azumaya import (azumaya_correspondence, contract_ideal, extend_ideal,
                      is_maximal_center_ideal, is_maximal_two_sided, random_center_ideal,
                      round_trip)
from .codim import CodimResult, finite_codim_check
from .demo import sqrt2_demo
from .oracle import fitting_ideal, geometric_oracle
from .pipeline import (FactorIdeal, RadicalResult, joint_eigenpoints, morita_lift, morita_rows,
                       rad_pipeline)

__all__ = [
    "azumaya_correspondence", "contract_ideal", "extend_ideal", "is_maximal_center_ideal",
    "is_maximal_two_sided", "random_center_ideal", "round_trip", "CodimResult",
    "finite_codim_check", "sqrt2_demo", "fitting_ideal", "geometric_oracle", "FactorIdeal",
    "RadicalResult", "joint_eigenpoints", "morita_lift", "morita_rows", "rad_pipeline",
]
