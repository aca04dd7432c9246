"""Tests for pseudomarginals, the index formula and Euler characteristics of the free sheaf."""

import pytest

from src.linalg import FieldSpec
from src.marginal import (
    boundary_h0,
    boundary_index_without_empty,
    cohomology_profile,
    constant_split,
    euler_char_sheaf,
    h0_via_finals,
    index_formula,
    marginal_report,
    pseudomarginal_dim,
    simplex_h0,
)
from src.corpus import face_families, hypergraph_corpus
from src.poset import Hypergraph, check_intersection_property, euler_char_mobius
from src.presheaf import free_copresheaf, free_presheaf, restricted_copresheaf
from src.utils.errors import StabilizationError


@pytest.mark.parametrize("name, expected", [("single", 1), ("edge", 3), ("boundary", 6), ("two_points", 2)])
def test_pseudomarginal_dims(named, rat, name, expected):
    assert pseudomarginal_dim(named[name], rat) == expected


def test_pseudomarginals_do_not_depend_on_the_field(named):
    assert pseudomarginal_dim(named["boundary"], FieldSpec.prime(5)) == 6


@pytest.mark.parametrize("name, expected", [("single", 2), ("edge", 4), ("boundary", 6)])
def test_index_formula(named, name, expected):
    assert index_formula(named[name]) == expected


@pytest.mark.parametrize("n, cardinality", [(1, 3), (2, 2), (3, 2)])
def test_index_formula_on_a_powerset(n, cardinality):
    assert index_formula(Hypergraph.powerset(n, cardinality)) == cardinality ** n


def test_euler_characteristic_of_the_free_sheaf(named, rat):
    edge = euler_char_sheaf(named["edge"], rat)
    assert edge.dims[0] == 4
    assert edge.euler == 4
    boundary = euler_char_sheaf(named["boundary"], rat)
    assert boundary.dims[:2] == [7, 1]
    assert boundary.euler == 6
    assert boundary.stabilized


def test_truncation_without_evidence_is_refused(named, rat):
    with pytest.raises(StabilizationError) as excinfo:
        euler_char_sheaf(named["boundary"], rat, max_degree=1)
    assert excinfo.value.witness["max_degree"] == 1


def test_closed_forms():
    assert simplex_h0(2, 3) == 9
    assert boundary_h0(3, 2) == 7
    assert boundary_index_without_empty(3, 2) == 6


def test_closed_forms_match_the_sheaf(named, rat):
    full = Hypergraph.powerset(2, 3, include_empty=False)
    assert euler_char_sheaf(full, rat).dims[0] == simplex_h0(2, 3)
    assert euler_char_sheaf(named["boundary_with_empty"], rat).dims[0] == boundary_h0(3, 2)
    assert euler_char_sheaf(named["boundary"], rat).euler == boundary_index_without_empty(3, 2)


def test_marginal_report_on_an_edge(named, rat):
    report = marginal_report(named["edge"], rat, with_oracle=True)
    assert report.violations == []
    out = report.to_json()
    assert out["h0_restricted"] == 3
    assert out["index"] == 4
    assert out["euler_poset"] == 1
    assert out["oracle"] == {"free": 4, "restricted": 3}


def test_marginal_report_without_weak_intersection(rat):
    h = Hypergraph.create(["1", "2", "3"], [["1", "2"], ["2", "3"]], default_cardinality=2)
    report = marginal_report(h, rat)
    assert not report.weak_intersection
    assert report.violations == []
    assert report.h0_restricted == 6


@pytest.mark.parametrize("name", ["edge", "boundary", "boundary_with_empty"])
def test_free_sheaf_splits(named, rat, name):
    report = constant_split(named[name], rat)
    assert report.weak_intersection
    assert report.holds
    assert not any(report.dims_restricted[1:])


def test_profile_records_its_cover(named, rat):
    profile = cohomology_profile(free_copresheaf(named["boundary"], rat))
    assert profile.cover == "maximal"
    assert profile.complete
    assert profile.to_json()["highest_nonzero_degree"] == 1


@pytest.mark.parametrize("name, expected", [("two_points", 4), ("boundary_with_empty", 1)])
def test_global_sections_through_final_elements(named, rat, name, expected):
    report = h0_via_finals(free_presheaf(named[name], rat))
    assert report.agrees
    assert report.by_sections == expected


@pytest.mark.slow
def test_index_formula_and_splitting_on_the_default_corpus(rat):
    checked = 0
    for h in hypergraph_corpus():
        intersection = check_intersection_property(h)
        if not intersection.weak:
            continue
        free = euler_char_sheaf(h, rat)
        assert free.euler == index_formula(h), h.labels
        assert free.euler == pseudomarginal_dim(h, rat) + euler_char_mobius(h.poset()), h.labels
        assert constant_split(h, rat).holds, h.labels
        restricted = cohomology_profile(restricted_copresheaf(h, rat), free.max_degree).dims
        assert not any(restricted[1:]), h.labels
        if intersection.strong:
            assert not any(free.dims[1:]), h.labels
        checked += 1
    assert checked >= len(face_families(4))
