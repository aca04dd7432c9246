"""Subspaces in canonical (reduced column echelon) form and their lattice operations."""

from typing import Dict, List, Optional, Sequence

from .field import FieldSpec
from .matrix import Matrix, SparseVector, axpy, reduced_row_basis
from ..utils.errors import InputError


class Subspace:
    """
    A subspace of K^n held by its unique reduced echelon basis.

    Basis vector k has a 1 at `pivots[k]` and a 0 at every other pivot, and `pivots[k]` is
    its first nonzero index. Two subspaces are equal iff their bases are equal.
    """

    __slots__ = ("ambient_dim", "field", "pivots", "vectors")

    def __init__(self, ambient_dim: int, field: FieldSpec, reduced: Dict[int, SparseVector]):
        self.ambient_dim = ambient_dim
        self.field = field
        self.pivots: List[int] = sorted(reduced)
        self.vectors: List[SparseVector] = [reduced[p] for p in self.pivots]

    @classmethod
    def span(cls, vectors: Sequence[SparseVector], ambient_dim: int, field: FieldSpec) -> "Subspace":
        for v in vectors:
            if v and max(v) >= ambient_dim:
                raise InputError(f"Vector index {max(v)} outside ambient dimension {ambient_dim}")
        return cls(ambient_dim, field, reduced_row_basis(vectors, field))

    @classmethod
    def zero(cls, ambient_dim: int, field: FieldSpec) -> "Subspace":
        return cls(ambient_dim, field, {})

    @classmethod
    def full(cls, ambient_dim: int, field: FieldSpec) -> "Subspace":
        return cls(ambient_dim, field, {i: {i: field.one} for i in range(ambient_dim)})

    @property
    def dim(self) -> int:
        return len(self.pivots)

    @property
    def basis(self) -> Matrix:
        """Basis vectors as the columns of an ambient_dim x dim matrix."""
        return Matrix.from_columns(self.vectors, self.ambient_dim, self.field)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.vectors == other.vectors

    __hash__ = None

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def _check_compatible(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim or self.field != other.field:
            raise InputError(
                f"Ambient mismatch: {self.ambient_dim}/{self.field.label} vs "
                f"{other.ambient_dim}/{other.field.label}"
            )

    def coordinates(self, vector: SparseVector) -> Optional[List]:
        """Coefficients of `vector` in this basis, or None if it lies outside."""
        coeffs = [vector.get(p, self.field.zero) for p in self.pivots]
        residual = dict(vector)
        for c, basis_vector in zip(coeffs, self.vectors):
            if c:
                axpy(residual, basis_vector, self.field.neg(c), self.field)
        return None if residual else coeffs

    def contains_vector(self, vector: SparseVector) -> bool:
        return self.coordinates(vector) is not None

    def coordinate_matrix(self, vectors: Sequence[SparseVector]) -> Matrix:
        """Re-express vectors of this subspace in its basis (one column per vector)."""
        columns = []
        for k, v in enumerate(vectors):
            coeffs = self.coordinates(v)
            if coeffs is None:
                raise InputError(f"Vector {k} does not lie in the subspace")
            columns.append({i: c for i, c in enumerate(coeffs) if c})
        return Matrix.from_columns(columns, self.dim, self.field)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace.span(self.vectors + other.vectors, self.ambient_dim, self.field)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Intersection from the kernel of [basis(S) | -basis(T)]."""
        self._check_compatible(other)
        if not self.dim or not other.dim:
            return Subspace.zero(self.ambient_dim, self.field)
        block = Matrix.hstack([self.basis, other.basis.scale(-1)])
        vectors = []
        for kernel_vector in block.kernel_vectors():
            image: SparseVector = {}
            for k, c in kernel_vector.items():
                if k < self.dim:
                    axpy(image, self.vectors[k], c, self.field)
            vectors.append(image)
        return Subspace.span(vectors, self.ambient_dim, self.field)

    def is_contained(self, other: "Subspace") -> bool:
        """True when self is a subspace of other."""
        self._check_compatible(other)
        return all(other.contains_vector(v) for v in self.vectors)

    def canonical_complement(self) -> "Subspace":
        """Span of the standard basis vectors at the non-pivot indices."""
        taken = set(self.pivots)
        return Subspace(self.ambient_dim, self.field,
                        {i: {i: self.field.one} for i in range(self.ambient_dim) if i not in taken})


def kernel_basis(m: Matrix) -> Subspace:
    return Subspace.span(m.kernel_vectors(), m.cols, m.field)


def image_basis(m: Matrix) -> Subspace:
    return Subspace.span(m.columns(), m.rows, m.field)


def subspace_sum(s: Subspace, t: Subspace) -> Subspace:
    return s.sum(t)


def subspace_intersect(s: Subspace, t: Subspace) -> Subspace:
    return s.intersect(t)


def is_contained(s: Subspace, t: Subspace) -> bool:
    return s.is_contained(t)


def canonical_complement(s: Subspace) -> Subspace:
    return s.canonical_complement()
