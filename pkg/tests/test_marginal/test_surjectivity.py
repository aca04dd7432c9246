"""Tests for restricting pseudomarginals along hypergraph inclusions."""

import pytest

from src.corpus import hypergraph_corpus, inclusion_corpus
from src.marginal import marginal_surjectivity
from src.poset import Hypergraph
from src.utils.errors import CheckFailure, InputError


def test_boundary_inside_the_simplex(named, rat):
    report = marginal_surjectivity(named["boundary"], named["full_simplex"], rat)
    assert (report.source_dim, report.target_dim) == (7, 6)
    assert report.surjective


def test_two_points_inside_an_edge(named, rat):
    report = marginal_surjectivity(named["two_points"], named["edge"], rat)
    assert (report.source_dim, report.target_dim, report.rank) == (3, 2, 2)
    assert report.to_json()["weak_intersection"] == {"source": True, "target": True}


def test_renamed_vertices(rat):
    small = Hypergraph.create(["a"], [["a"]], default_cardinality=2)
    large = Hypergraph.create(["1", "2"], [["1"], ["2"], ["1", "2"]], default_cardinality=2)
    report = marginal_surjectivity(small, large, rat, {"a": "2"})
    assert report.surjective
    assert report.target_dim == 1


def test_face_missing_from_the_target(named, rat):
    with pytest.raises(CheckFailure, match="not strict") as excinfo:
        marginal_surjectivity(named["edge"], named["two_points"], rat)
    assert excinfo.value.witness["face"] == "{1,2}"


def test_cardinality_mismatch(named, rat):
    three = Hypergraph.create(["1", "2"], [["1"], ["2"], ["1", "2"]], default_cardinality=3)
    with pytest.raises(CheckFailure, match="Cardinalities"):
        marginal_surjectivity(named["two_points"], three, rat)


def test_vertex_map_must_cover_the_source(named, rat):
    with pytest.raises(InputError, match="misses"):
        marginal_surjectivity(named["edge"], named["edge"], rat, {"1": "1"})


def test_surjective_on_the_corpus_under_weak_intersection(rat):
    for inclusion in inclusion_corpus(hypergraph_corpus(seed=1, exhaustive_vertices=2, samples=4), seed=1):
        report = marginal_surjectivity(inclusion.small, inclusion.large, rat)
        if all(report.weak_intersection.values()):
            assert report.surjective, inclusion.large.labels


@pytest.mark.slow
def test_surjective_on_the_default_corpus(rat):
    for inclusion in inclusion_corpus(hypergraph_corpus(), seed=0):
        report = marginal_surjectivity(inclusion.small, inclusion.large, rat)
        if all(report.weak_intersection.values()):
            assert report.surjective, inclusion.large.labels
