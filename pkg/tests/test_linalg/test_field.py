"""Tests for coefficient fields."""

from fractions import Fraction

import pytest

from src.linalg import FieldSpec
from src.utils.errors import InputError


def test_parse_rationals():
    field = FieldSpec.parse("rat")
    assert field.kind == "rat"
    assert field.label == "rat"
    assert not field.is_prime_field


def test_parse_prime():
    field = FieldSpec.parse("fp:7")
    assert field.p == 7
    assert field.label == "fp:7"
    assert field.is_prime_field


def test_parse_fast_mode_prime():
    assert FieldSpec.parse("fp").p == 1000003


@pytest.mark.parametrize("text", ["fp:1", "fp:8", "fp:abc", "real", "fp:2147483659"])
def test_parse_rejects(text):
    with pytest.raises(InputError):
        FieldSpec.parse(text)


def test_coerce_fraction_string(rat):
    assert rat.coerce("3/4") == Fraction(3, 4)
    assert rat.coerce(-2) == Fraction(-2)


def test_coerce_into_prime_field(fp7):
    assert fp7.coerce(-1) == 6
    assert fp7.coerce("1/2") == 4
    with pytest.raises(InputError):
        fp7.coerce("1/7")


def test_prime_arithmetic(fp7):
    assert fp7.mul(3, 5) == 1
    assert fp7.inv(3) == 5
    assert fp7.neg(2) == 5
    with pytest.raises(ZeroDivisionError):
        fp7.inv(0)


def test_to_json(rat, fp7):
    assert rat.to_json(Fraction(1, 2)) == "1/2"
    assert fp7.to_json(3) == 3
    assert fp7.to_signed_int(6) == -1
