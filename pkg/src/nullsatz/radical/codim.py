"""Finite codimension of a left ideal and maximality of its trace on the center."""

from dataclasses import dataclass

from ..polymod import QuotientSpace, is_zero_dimensional
from .azumaya import contract_ideal, is_maximal_center_ideal


@dataclass
class CodimResult:
    finite: bool
    codim: object          # an int, or None for infinite codimension
    center_maximal: bool

    def __iter__(self):
        yield self.finite
        yield self.codim


def finite_codim_check(m):
    """dim_F A[x]/m, and whether m ∩ F[x] is a maximal ideal of F[x]."""
    ok, _ = is_zero_dimensional(m.module)
    if not ok:
        return CodimResult(False, None, False)
    codim = 0 if m.is_full() else QuotientSpace(m.module).dim
    return CodimResult(True, codim, is_maximal_center_ideal(contract_ideal(m)))
