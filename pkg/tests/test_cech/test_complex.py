"""Tests for Čech complexes and relative cohomology."""

import pytest

from src.cech import (
    canonical_cover,
    cech_complex,
    enumerate_tuples,
    leray_cover,
    maximal_cover,
    relative_cohomology,
)
from src.corpus import hypergraph_corpus
from src.linalg import FieldSpec
from src.presheaf import (
    constant_copresheaf,
    free_copresheaf,
    free_presheaf,
    restricted_copresheaf,
)
from src.utils.errors import InputError


def _dims(functor, cover=None, max_degree=3, mode="alternating"):
    cover = cover or canonical_cover(functor.poset, functor.topology)
    return cech_complex(cover, functor, max_degree, mode).cohomology_dims()


def test_free_copresheaf_on_an_edge(named, rat):
    assert _dims(free_copresheaf(named["edge"], rat)) == [4, 0, 0]


def test_free_copresheaf_on_the_boundary(named, rat):
    assert _dims(free_copresheaf(named["boundary"], rat)) == [7, 1, 0]


def test_free_copresheaf_with_the_empty_face(named, rat):
    assert _dims(free_copresheaf(named["boundary_with_empty"], rat))[0] == 7


def test_restricted_copresheaf_on_an_edge(named, rat):
    assert _dims(restricted_copresheaf(named["edge"], rat)) == [3, 0, 0]


def test_constant_sheaf_on_a_circle(named, rat):
    assert _dims(constant_copresheaf(named["boundary"].poset(), rat)) == [1, 1, 0]


def test_full_and_alternating_agree(named, rat):
    f = free_copresheaf(named["boundary"], rat)
    assert _dims(f, mode="full") == _dims(f, mode="alternating")


def test_alternating_tuples_are_increasing(named):
    cover = canonical_cover(named["edge"].poset(), "lower")
    levels = enumerate_tuples(cover, 2, "alternating")
    assert all(list(u) == sorted(set(u)) for level in levels for u, _ in level)
    with pytest.raises(InputError):
        enumerate_tuples(cover, 2, "sideways")


def test_delta_squared_vanishes(named, rat):
    complex_ = cech_complex(canonical_cover(named["boundary"].poset(), "lower"),
                            free_copresheaf(named["boundary"], rat), 3, "full")
    assert complex_.delta_squared_violations() == []


def test_complete_flag(named, rat):
    f = free_copresheaf(named["edge"], rat)
    assert cech_complex(maximal_cover(f.poset, "lower"), f, 1).complete
    assert not cech_complex(canonical_cover(f.poset, "lower"), f, 2).complete


def test_degree_at_the_truncation_is_refused(named, rat):
    f = free_copresheaf(named["edge"], rat)
    complex_ = cech_complex(canonical_cover(f.poset, "lower"), f, 2)
    with pytest.raises(InputError, match="out of range"):
        complex_.cohomology_dim(2)


def test_cover_must_match_the_variance(named, rat):
    v = free_presheaf(named["edge"], rat)
    with pytest.raises(InputError):
        cech_complex(canonical_cover(v.poset, "lower"), v, 2)


def test_complex_export(named, rat):
    f = free_copresheaf(named["edge"], rat)
    complex_ = cech_complex(canonical_cover(f.poset, "lower"), f, 1)
    exported = complex_.to_json()
    assert set(exported) == {"0", "1"}
    assert exported["1"]["delta"] is None
    assert len(exported["0"]["delta"]) == complex_.dim(1)


def test_leray_cover_matches_canonical_cover_on_the_corpus():
    rat = FieldSpec.rationals()
    for h in hypergraph_corpus(seed=0, exhaustive_vertices=2, samples=3):
        f = free_copresheaf(h, rat)
        assert _dims(f, leray_cover(f.poset, "lower")) == _dims(f), h.labels


def test_relative_cohomology_of_a_circle_and_a_point(named, rat):
    f = constant_copresheaf(named["boundary"].poset(), rat)
    report = relative_cohomology(f, ["{1}"], 3)
    assert report.exact
    assert report.dims_b == [1, 1, 0]
    assert report.dims_a == [1, 0, 0]
    assert report.dims_relative[0] == 0
