"""Exact matrices with sparse row storage and Gauss-Jordan elimination."""

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .field import FieldSpec, Scalar
from ..utils.errors import InputError

SparseVector = Dict[int, Scalar]


def axpy(target: SparseVector, source: SparseVector, factor: Scalar, field: FieldSpec) -> None:
    """In place: target += factor * source."""
    p = field.p
    get = target.get
    if p is None:
        for k, v in source.items():
            nv = get(k, 0) + factor * v
            if nv:
                target[k] = nv
            else:
                target.pop(k, None)
    else:
        for k, v in source.items():
            nv = (get(k, 0) + factor * v) % p
            if nv:
                target[k] = nv
            else:
                target.pop(k, None)


def scaled(vector: SparseVector, factor: Scalar, field: FieldSpec) -> SparseVector:
    if not factor:
        return {}
    p = field.p
    if p is None:
        return {k: v * factor for k, v in vector.items()}
    return {k: v * factor % p for k, v in vector.items()}


def reduced_row_basis(vectors: Iterable[SparseVector], field: FieldSpec) -> Dict[int, SparseVector]:
    """
    Reduced row echelon form of the span of `vectors`.

    Returns rows keyed by pivot index. Each row has a 1 at its pivot, which is its
    smallest index, and zeros at every other pivot, so the result is the unique
    canonical basis of the span.
    """
    pivots: Dict[int, SparseVector] = {}
    for vector in vectors:
        row = dict(vector)
        hits = [c for c in row if c in pivots]
        for col in hits:
            axpy(row, pivots[col], field.neg(row[col]), field)
        if not row:
            continue
        lead = min(row)
        row = scaled(row, field.inv(row[lead]), field)
        for other in pivots.values():
            coeff = other.get(lead)
            if coeff:
                axpy(other, row, field.neg(coeff), field)
        pivots[lead] = row
    return pivots


class Matrix:
    """
    An exact rows x cols matrix over a field.

    Entries live in per-row dictionaries holding only nonzero values. Instances are
    treated as immutable once built.
    """

    __slots__ = ("rows", "cols", "field", "_data")

    def __init__(self, rows: int, cols: int, field: FieldSpec,
                 data: Optional[Dict[int, SparseVector]] = None):
        if rows < 0 or cols < 0:
            raise InputError(f"Invalid matrix shape {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self.field = field
        self._data = {i: r for i, r in (data or {}).items() if r}

    # Construction

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec) -> "Matrix":
        return cls(rows, cols, field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> "Matrix":
        return cls(n, n, field, {i: {i: field.one} for i in range(n)})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: FieldSpec, cols: Optional[int] = None) -> "Matrix":
        """Build from dense nested lists; entries are coerced into the field."""
        n_cols = cols if cols is not None else (len(rows[0]) if rows else 0)
        data = {}
        for i, row in enumerate(rows):
            if len(row) != n_cols:
                raise InputError(f"Row {i} has {len(row)} entries, expected {n_cols}")
            sparse = {}
            for j, value in enumerate(row):
                v = field.coerce(value)
                if v:
                    sparse[j] = v
            data[i] = sparse
        return cls(len(rows), n_cols, field, data)

    @classmethod
    def from_columns(cls, columns: Sequence[SparseVector], n_rows: int, field: FieldSpec) -> "Matrix":
        """Build from sparse column vectors."""
        data: Dict[int, SparseVector] = {}
        for j, column in enumerate(columns):
            for i, v in column.items():
                if v:
                    data.setdefault(i, {})[j] = v
        return cls(n_rows, len(columns), field, data)

    @classmethod
    def from_row_vectors(cls, row_vectors: Sequence[SparseVector], n_cols: int, field: FieldSpec) -> "Matrix":
        return cls(len(row_vectors), n_cols, field, {i: dict(r) for i, r in enumerate(row_vectors)})

    # Access

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self._data.values())

    def entry(self, i: int, j: int) -> Scalar:
        return self._data.get(i, {}).get(j, self.field.zero)

    def row(self, i: int) -> SparseVector:
        return self._data.get(i, {})

    def row_items(self):
        return self._data.items()

    def columns(self) -> List[SparseVector]:
        cols: List[SparseVector] = [dict() for _ in range(self.cols)]
        for i, row in self._data.items():
            for j, v in row.items():
                cols[j][i] = v
        return cols

    def column(self, j: int) -> SparseVector:
        return {i: row[j] for i, row in self._data.items() if j in row}

    def to_dense(self) -> List[List[Scalar]]:
        zero = self.field.zero
        out = [[zero] * self.cols for _ in range(self.rows)]
        for i, row in self._data.items():
            for j, v in row.items():
                out[i][j] = v
        return out

    def to_json(self) -> List[list]:
        return [[self.field.to_json(v) for v in row] for row in self.to_dense()]

    def is_zero(self) -> bool:
        return not self._data

    # Algebra

    def transpose(self) -> "Matrix":
        data: Dict[int, SparseVector] = {}
        for i, row in self._data.items():
            for j, v in row.items():
                data.setdefault(j, {})[i] = v
        return Matrix(self.cols, self.rows, self.field, data)

    def apply(self, vector: SparseVector) -> SparseVector:
        """Matrix times a sparse column vector."""
        out: SparseVector = {}
        p = self.field.p
        for i, row in self._data.items():
            acc = 0
            for j, v in vector.items():
                a = row.get(j)
                if a:
                    acc += a * v
            if p is not None:
                acc %= p
            if acc:
                out[i] = acc if p is not None else self.field.coerce(acc)
        return out

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise InputError(f"Shape mismatch {self.shape} @ {other.shape}")
        data: Dict[int, SparseVector] = {}
        odata = other._data
        for i, row in self._data.items():
            acc: SparseVector = {}
            for k, a in row.items():
                orow = odata.get(k)
                if orow:
                    axpy(acc, orow, a, self.field)
            if acc:
                data[i] = acc
        return Matrix(self.rows, other.cols, self.field, data)

    def _combine(self, other: "Matrix", sign: int) -> "Matrix":
        if self.shape != other.shape:
            raise InputError(f"Shape mismatch {self.shape} vs {other.shape}")
        data = {i: dict(r) for i, r in self._data.items()}
        factor = self.field.coerce(sign)
        for i, row in other._data.items():
            target = data.setdefault(i, {})
            axpy(target, row, factor, self.field)
        return Matrix(self.rows, self.cols, self.field, data)

    def __add__(self, other: "Matrix") -> "Matrix":
        return self._combine(other, 1)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self._combine(other, -1)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, factor) -> "Matrix":
        factor = self.field.coerce(factor)
        return Matrix(self.rows, self.cols, self.field,
                      {i: scaled(r, factor, self.field) for i, r in self._data.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    __hash__ = None

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols}, nnz={self.nnz}, field={self.field.label})"

    def first_difference(self, other: "Matrix") -> Optional[Tuple[int, int]]:
        """Smallest (row, col) where two equally shaped matrices differ."""
        for i in sorted(set(self._data) | set(other._data)):
            a, b = self._data.get(i, {}), other._data.get(i, {})
            if a != b:
                j = min(k for k in set(a) | set(b) if a.get(k, 0) != b.get(k, 0))
                return i, j
        return None

    def select_columns(self, indices: Sequence[int]) -> "Matrix":
        position = {j: k for k, j in enumerate(indices)}
        data = {}
        for i, row in self._data.items():
            new = {position[j]: v for j, v in row.items() if j in position}
            if new:
                data[i] = new
        return Matrix(self.rows, len(indices), self.field, data)

    def select_rows(self, indices: Sequence[int]) -> "Matrix":
        return Matrix(len(indices), self.cols, self.field,
                      {k: dict(self._data[i]) for k, i in enumerate(indices) if i in self._data})

    @staticmethod
    def hstack(blocks: Sequence["Matrix"], rows: Optional[int] = None, field: Optional[FieldSpec] = None) -> "Matrix":
        if not blocks:
            return Matrix(rows or 0, 0, field)
        n_rows = blocks[0].rows
        data: Dict[int, SparseVector] = {}
        offset = 0
        for block in blocks:
            if block.rows != n_rows:
                raise InputError("hstack blocks must share the row count")
            for i, row in block._data.items():
                target = data.setdefault(i, {})
                for j, v in row.items():
                    target[offset + j] = v
            offset += block.cols
        return Matrix(n_rows, offset, blocks[0].field, data)

    @staticmethod
    def vstack(blocks: Sequence["Matrix"], cols: Optional[int] = None, field: Optional[FieldSpec] = None) -> "Matrix":
        if not blocks:
            return Matrix(0, cols or 0, field)
        n_cols = blocks[0].cols
        data: Dict[int, SparseVector] = {}
        offset = 0
        for block in blocks:
            if block.cols != n_cols:
                raise InputError("vstack blocks must share the column count")
            for i, row in block._data.items():
                data[offset + i] = dict(row)
            offset += block.rows
        return Matrix(offset, n_cols, blocks[0].field, data)

    # Elimination

    def rank(self) -> int:
        return len(reduced_row_basis(self._data.values(), self.field))

    def kernel_vectors(self) -> List[SparseVector]:
        """A basis of the right kernel, one vector per free column."""
        reduced = reduced_row_basis(self._data.values(), self.field)
        free = [j for j in range(self.cols) if j not in reduced]
        vectors = {f: {f: self.field.one} for f in free}
        for pivot, row in reduced.items():
            for j, v in row.items():
                if j != pivot:
                    vectors[j][pivot] = self.field.neg(v)
        return [vectors[f] for f in free]

    def inverse(self) -> "Matrix":
        """Inverse of a square invertible matrix (Gauss-Jordan on [M | I])."""
        n = self.rows
        if n != self.cols:
            raise InputError(f"Cannot invert a {self.rows}x{self.cols} matrix")
        augmented = []
        for i in range(n):
            row = dict(self._data.get(i, {}))
            row[n + i] = self.field.one
            augmented.append(row)
        reduced = reduced_row_basis(augmented, self.field)
        if sorted(reduced) != list(range(n)):
            raise InputError("Matrix is singular")
        data = {i: {j - n: v for j, v in reduced[i].items() if j >= n} for i in range(n)}
        return Matrix(n, n, self.field, data)


class MatrixBuilder:
    """Accumulates scaled blocks into a sparse matrix."""

    def __init__(self, rows: int, cols: int, field: FieldSpec):
        self.rows = rows
        self.cols = cols
        self.field = field
        self._data: Dict[int, SparseVector] = {}

    def add_block(self, row_offset: int, col_offset: int, block: Matrix, coeff=1) -> None:
        factor = self.field.coerce(coeff)
        if not factor:
            return
        for i, row in block.row_items():
            target = self._data.setdefault(row_offset + i, {})
            axpy(target, {col_offset + j: v for j, v in row.items()}, factor, self.field)

    def add_identity(self, row_offset: int, col_offset: int, size: int, coeff=1) -> None:
        factor = self.field.coerce(coeff)
        for k in range(size):
            target = self._data.setdefault(row_offset + k, {})
            axpy(target, {col_offset + k: self.field.one}, factor, self.field)

    def build(self) -> Matrix:
        return Matrix(self.rows, self.cols, self.field, self._data)


def rank(m: Matrix) -> int:
    return m.rank()
