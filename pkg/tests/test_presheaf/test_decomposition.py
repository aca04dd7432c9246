"""Tests for condition G and interaction decompositions."""

import pytest

from src.corpus import hypergraph_corpus, presheaf_corpus
from src.linalg import FieldSpec
from src.poset import Hypergraph
from src.presheaf import (
    check_condition_g,
    free_presheaf,
    interaction_decomposition,
    interaction_dims_via_mobius,
    reduced_presheaf,
    restricted_index,
)


def test_free_presheaf_on_an_edge_fails_condition_g(named, rat):
    report = check_condition_g(free_presheaf(named["edge"], rat))
    assert not report.holds
    first = report.violations[0]
    assert (first.alpha, first.beta) == ("{1,2}", "{1}")
    assert first.witness == ["1", "1", "1", "1"]


def test_free_presheaf_on_an_edge_has_no_decomposition(named, rat):
    result = interaction_decomposition(free_presheaf(named["edge"], rat))
    assert not result.succeeded
    assert result.failure.element == "{1,2}"
    assert (result.failure.dim, result.failure.dim_sum, result.failure.rank) == (4, 5, 4)


def test_reduced_presheaf_decomposes(named, rat):
    v = reduced_presheaf(named["edge"], rat)
    assert check_condition_g(v).holds
    result = interaction_decomposition(v)
    assert result.succeeded
    assert result.decomposition.dims() == {"{1}": 1, "{2}": 1, "{1,2}": 1}
    assert result.decomposition.law_violations() == []


def test_free_presheaf_with_empty_face_matches_mobius(rat):
    h = Hypergraph.powerset(2)
    result = interaction_decomposition(free_presheaf(h, rat))
    assert result.succeeded
    assert result.decomposition.dims() == interaction_dims_via_mobius(h)
    assert set(result.decomposition.dims().values()) == {1}


def test_projectors_at_the_top(rat):
    h = Hypergraph.powerset(2)
    decomposition = interaction_decomposition(free_presheaf(h, rat)).decomposition
    e = decomposition.projector("{1,2}", "{}")
    assert e @ e == e
    assert e.rank() == 1


def test_component_is_an_indicator(rat):
    h = Hypergraph.powerset(2)
    decomposition = interaction_decomposition(free_presheaf(h, rat)).decomposition
    component = decomposition.component("{1}")
    assert component.dims == (0, 1, 0, 1)


def test_restricted_index(named):
    assert restricted_index(named["edge"]) == 3
    assert restricted_index(named["boundary"]) == 6


RANDOM_PRESHEAVES = presheaf_corpus(seed=0, count=100, max_size=6)


def test_random_presheaf_corpus_shape():
    assert len(RANDOM_PRESHEAVES) >= 100
    assert {v.field.label for v in RANDOM_PRESHEAVES} == {"fp:1009"}
    assert max(len(v.poset) for v in RANDOM_PRESHEAVES) == 6
    assert all(max(v.dims) <= 4 for v in RANDOM_PRESHEAVES)


@pytest.mark.parametrize("v", RANDOM_PRESHEAVES, ids=lambda v: "-".join(v.poset.elements))
def test_condition_g_iff_decomposable_on_random_presheaves(v):
    holds = check_condition_g(v).holds
    result = interaction_decomposition(v)
    assert holds == result.succeeded
    if result.succeeded:
        assert result.decomposition.law_violations() == []


def test_condition_g_iff_decomposable_on_small_hypergraphs():
    rat = FieldSpec.rationals()
    for h in hypergraph_corpus(seed=0, exhaustive_vertices=2, samples=0):
        for v in (free_presheaf(h, rat), reduced_presheaf(h, rat)):
            assert check_condition_g(v).holds == interaction_decomposition(v, with_projectors=False).succeeded


@pytest.mark.slow
def test_condition_g_iff_decomposable_on_the_default_corpus():
    rat = FieldSpec.rationals()
    for h in hypergraph_corpus(seed=0, samples=0):
        for v in (free_presheaf(h, rat), reduced_presheaf(h, rat)):
            assert check_condition_g(v).holds == interaction_decomposition(v, with_projectors=False).succeeded, h.labels
