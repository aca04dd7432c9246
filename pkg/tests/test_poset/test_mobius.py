"""Tests for Möbius functions and Euler characteristics."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from src.corpus import random_poset
from src.poset import (
    Hypergraph,
    chain_counts,
    euler_char_bounded,
    euler_char_hall,
    euler_char_mobius,
    face_count_euler,
    mobius,
)


def test_mobius_of_an_edge(named):
    table = mobius(named["edge"].poset())
    assert table.mu("{1,2}", "{1}") == -1
    assert table.mu("{1,2}", "{1,2}") == 1
    assert table.mu("{1}", "{2}") == 0
    assert table.row_sum_violations() == []


def test_mobius_to_empty_face():
    table = mobius(Hypergraph.powerset(2).poset())
    assert table.mu("{1,2}", "{}") == 1
    assert table.mu("{1}", "{}") == -1


def test_hall_chain_counts(named):
    assert chain_counts(named["edge"].poset()) == [3, 2]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_simplex_and_boundary(n):
    assert euler_char_mobius(Hypergraph.powerset(n, include_empty=False).poset()) == 1
    assert euler_char_mobius(Hypergraph.boundary(n).poset()) == 1 + (-1) ** n


def test_boundary_of_triangle_is_a_circle(named):
    p = named["boundary"].poset()
    assert euler_char_mobius(p) == 0
    assert euler_char_hall(p) == 0
    assert euler_char_bounded(p) == 0
    assert face_count_euler(named["boundary"]) == 0


def test_antichain():
    p = Hypergraph.create(["1", "2", "3"], [["1"], ["2"], ["3"]], default_cardinality=2).poset()
    assert euler_char_mobius(p) == 3


@given(st.integers(min_value=0, max_value=10_000), st.integers(min_value=1, max_value=6))
@settings(max_examples=40, deadline=None)
def test_three_euler_characteristics_agree(seed, size):
    p = random_poset(random.Random(seed), size)
    assert mobius(p).row_sum_violations() == []
    assert euler_char_mobius(p) == euler_char_hall(p) == euler_char_bounded(p)
