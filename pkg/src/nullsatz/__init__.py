"""Exact computation of Jacobson radicals of left ideals in polynomial rings
over finite-dimensional algebras, with an independent geometric cross-check."""

__version__ = "0.1.0"
