"""Exact linear algebra over the rationals or a prime field."""

from .field import FieldSpec, RATIONALS
from .matrix import Matrix, MatrixBuilder, reduced_row_basis, rank
from .subspace import (
    Subspace,
    kernel_basis,
    image_basis,
    subspace_sum,
    subspace_intersect,
    is_contained,
    canonical_complement,
)

__all__ = [
    "FieldSpec",
    "RATIONALS",
    "Matrix",
    "MatrixBuilder",
    "reduced_row_basis",
    "rank",
    "Subspace",
    "kernel_basis",
    "image_basis",
    "subspace_sum",
    "subspace_intersect",
    "is_contained",
    "canonical_complement",
]
