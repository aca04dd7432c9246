"""Tests for exact sparse matrices, with galois as a rank oracle over GF(p)."""

from fractions import Fraction

import galois
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.linalg import FieldSpec, Matrix, MatrixBuilder
from src.linalg.field import FAST_MODE_PRIME
from src.utils.errors import InputError

small_matrices = st.integers(min_value=1, max_value=5).flatmap(
    lambda rows: st.integers(min_value=1, max_value=5).flatmap(
        lambda cols: st.lists(
            st.lists(st.integers(min_value=-3, max_value=3), min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
)


def test_identity_and_shape(rat):
    m = Matrix.identity(3, rat)
    assert m.shape == (3, 3)
    assert m.rank() == 3
    assert m.nnz == 3


def test_from_rows_checks_row_length(rat):
    with pytest.raises(InputError):
        Matrix.from_rows([[1, 2], [3]], rat)


def test_product_and_sum(rat):
    a = Matrix.from_rows([[1, 2], [0, 1]], rat)
    b = Matrix.from_rows([[1, 0], [1, 1]], rat)
    assert (a @ b).to_dense() == [[3, 2], [1, 1]]
    assert (a + b).to_dense() == [[2, 2], [1, 2]]
    assert (a - a).is_zero()


def test_shape_mismatch(rat):
    with pytest.raises(InputError):
        Matrix.identity(2, rat) @ Matrix.identity(3, rat)


def test_inverse(rat):
    a = Matrix.from_rows([[2, 1], [1, 1]], rat)
    assert a @ a.inverse() == Matrix.identity(2, rat)
    with pytest.raises(InputError):
        Matrix.from_rows([[1, 2], [2, 4]], rat).inverse()


def test_kernel_vectors(rat):
    a = Matrix.from_rows([[1, 1, 0], [0, 0, 1]], rat)
    kernel = a.kernel_vectors()
    assert len(kernel) == 1
    assert a.apply(kernel[0]) == {}


def test_rational_entries_stay_exact(rat):
    a = Matrix.from_rows([["1/3", "2/3"]], rat)
    assert a.entry(0, 0) == Fraction(1, 3)
    assert a.to_json() == [["1/3", "2/3"]]


def test_rank_depends_on_characteristic():
    rows = [[1, 1], [1, -1]]
    assert Matrix.from_rows(rows, FieldSpec.rationals()).rank() == 2
    assert Matrix.from_rows(rows, FieldSpec.prime(2)).rank() == 1


def test_builder_accumulates_blocks(rat):
    builder = MatrixBuilder(2, 4, rat)
    builder.add_block(0, 0, Matrix.identity(2, rat))
    builder.add_block(0, 2, Matrix.identity(2, rat), coeff=-1)
    builder.add_identity(0, 0, 2)
    assert builder.build().to_dense() == [[2, 0, -1, 0], [0, 2, 0, -1]]


@given(small_matrices)
@settings(max_examples=60, deadline=None)
def test_rank_matches_galois(rows):
    field = FieldSpec.prime(7)
    gf = galois.GF(7)
    expected = np.linalg.matrix_rank(gf(np.array(rows) % 7))
    assert Matrix.from_rows(rows, field).rank() == int(expected)


@given(small_matrices)
@settings(max_examples=60, deadline=None)
def test_rank_of_transpose_and_rank_nullity(rows):
    m = Matrix.from_rows(rows, FieldSpec.rationals())
    assert m.rank() == m.transpose().rank()
    assert len(m.kernel_vectors()) == m.cols - m.rank()


@given(small_matrices)
@settings(max_examples=40, deadline=None)
def test_prime_rank_never_exceeds_rational_rank(rows):
    assert Matrix.from_rows(rows, FieldSpec.prime(3)).rank() <= Matrix.from_rows(rows, FieldSpec.rationals()).rank()


entries_up_to_two = st.integers(min_value=1, max_value=6).flatmap(
    lambda rows: st.integers(min_value=1, max_value=6).flatmap(
        lambda cols: st.lists(
            st.lists(st.integers(min_value=-2, max_value=2), min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
)


@given(entries_up_to_two)
@settings(max_examples=200, deadline=None)
def test_fast_mode_rank_equals_rational_rank(rows):
    # 6x6 minors with entries in -2..2 stay below 24**3.
    fast = FieldSpec.parse("fp")
    assert fast.label == f"fp:{FAST_MODE_PRIME}"
    assert Matrix.from_rows(rows, fast).rank() == Matrix.from_rows(rows, FieldSpec.rationals()).rank()
