"""Tests for nerve complexes of functors."""

import pytest

from src.nerve import nerve_complex
from src.presheaf import constant_copresheaf, constant_presheaf, free_presheaf
from src.utils.errors import InputError


def test_constant_copresheaf_on_an_edge(named, rat):
    p = named["edge"].poset()
    complex_ = nerve_complex(p, constant_copresheaf(p, rat), "lower", 3)
    assert complex_.dims() == [3, 2, 0, 0]
    assert complex_.cohomology_dims() == [1, 0, 0]


def test_constant_presheaf_on_the_boundary_is_a_circle(named, rat):
    p = named["boundary"].poset()
    complex_ = nerve_complex(p, constant_presheaf(p, rat), "upper", 3)
    assert complex_.cohomology_dims() == [1, 1, 0]
    assert complex_.delta_squared_violations() == []


@pytest.mark.parametrize("name", ["edge", "boundary"])
def test_full_and_nondegenerate_agree(named, rat, name):
    p = named[name].poset()
    f = constant_copresheaf(p, rat)
    full = nerve_complex(p, f, "lower", 3, "full")
    assert full.cohomology_dims() == nerve_complex(p, f, "lower", 3).cohomology_dims()


def test_variance_mismatch(named, rat):
    h = named["edge"]
    with pytest.raises(InputError, match="copresheaf"):
        nerve_complex(h.poset(), free_presheaf(h, rat), "lower", 2)


def test_functor_on_another_poset(named, rat):
    with pytest.raises(InputError, match="different poset"):
        nerve_complex(named["edge"].poset(), constant_presheaf(named["boundary"].poset(), rat), "upper", 2)
