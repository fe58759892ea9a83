from .fields import (QQ, Embedding, ExtensionField, Field, FieldElem, PrimeField,
                     RationalField, basis_over_prime, embed, field_from_json, field_to_json,
                     finite_field, flatten, make_extension, prime_field, unflatten)
from .linalg import (Coordinatizer, ExactMatrix, IncrementalBasis, intersect_rowspaces,
                     intersect_rowspaces_raw, inverse, kernel_basis, kernel_basis_raw, matmul,
                     rref, rref_matrix, solve)

__all__ = [
    "QQ", "Embedding", "ExtensionField", "Field", "FieldElem", "PrimeField", "RationalField",
    "basis_over_prime", "embed", "field_from_json", "field_to_json", "finite_field", "flatten",
    "make_extension", "prime_field", "unflatten", "Coordinatizer", "ExactMatrix",
    "IncrementalBasis", "intersect_rowspaces", "intersect_rowspaces_raw", "inverse",
    "kernel_basis", "kernel_basis_raw", "matmul", "rref", "rref_matrix", "solve",
]
