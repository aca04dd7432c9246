"""Tests for poset functors and their constructions."""

import random

import pytest

from src.linalg import FieldSpec, Matrix
from src.poset import Poset
from src.presheaf import (
    Copresheaf,
    InjectivePresheaf,
    constant_presheaf,
    free_copresheaf,
    free_presheaf,
    indicator_presheaf,
    random_injective_presheaf,
    reduced_presheaf,
    restricted_copresheaf,
)
from src.utils.errors import InputError, ValidationError


@pytest.fixture
def chain():
    return Poset.from_generators(["a", "b", "c"], [("a", "b"), ("b", "c")])


def test_free_presheaf_dims(named, rat):
    v = free_presheaf(named["edge"], rat)
    assert v.dims == (2, 2, 4)
    assert v.map_for("{1,2}", "{1}").shape == (4, 2)
    assert v.validate() is v


def test_free_copresheaf_is_the_transpose(named, rat):
    v = free_presheaf(named["edge"], rat)
    f = free_copresheaf(named["edge"], rat)
    assert f.map_for("{1,2}", "{1}") == v.map_for("{1,2}", "{1}").transpose()
    assert f.validate() is f


def test_reduced_and_restricted_dims(named, rat):
    assert reduced_presheaf(named["edge"], rat).validate().dims == (1, 1, 3)
    assert restricted_copresheaf(named["edge"], rat).validate().dims == (1, 1, 3)


def test_from_maps_completes_composites(chain, rat):
    one = Matrix.identity(1, rat)
    v = InjectivePresheaf.from_maps(chain, [1, 1, 1], {(0, 1): one, (1, 2): one}, rat)
    assert v.map_idx(0, 2) == one


def test_from_maps_rejects_disagreeing_composite(chain, rat):
    one = Matrix.identity(1, rat)
    with pytest.raises(ValidationError, match="disagrees"):
        InjectivePresheaf.from_maps(chain, [1, 1, 1], {(0, 1): one, (1, 2): one, (0, 2): one.scale(2)}, rat)


def test_missing_map_is_rejected(chain, rat):
    with pytest.raises(ValidationError, match="Missing map"):
        InjectivePresheaf(chain, [1, 1, 1], {}, rat)


def test_non_injective_map_fails_validation(rat):
    p = Poset.from_generators(["a", "b"], [("a", "b")])
    v = InjectivePresheaf(p, [1, 1], {(0, 1): Matrix.zeros(1, 1, rat)}, rat)
    with pytest.raises(ValidationError, match="not injective"):
        v.validate()


def test_copresheaf_maps_must_be_surjective(rat):
    p = Poset.from_generators(["a", "b"], [("a", "b")])
    f = Copresheaf(p, [2, 1], {(0, 1): Matrix.zeros(1, 2, rat)}, rat)
    with pytest.raises(ValidationError, match="not surjective"):
        f.validate()


def test_indicator_presheaf(chain, rat):
    v = indicator_presheaf(chain, "b", rat)
    assert v.dims == (1, 1, 0)
    assert v.validate() is v


def test_constant_presheaf(chain, rat):
    assert constant_presheaf(chain, rat, dim=2).dims == (2, 2, 2)


def test_random_presheaf_is_valid(chain):
    field = FieldSpec.prime(1009)
    v = random_injective_presheaf(chain, random.Random(3), field)
    assert v.validate() is v
    assert all(d <= 4 for d in v.dims)


def test_random_presheaf_needs_a_prime_field(chain, rat):
    with pytest.raises(InputError):
        random_injective_presheaf(chain, random.Random(0), rat)


def test_restricted_to_subposet(named, rat):
    v = free_presheaf(named["edge"], rat).restricted_to(["{1}", "{1,2}"])
    assert v.dims == (2, 4)
    assert v.validate() is v
