"""Tests for the built-in corpora."""

from src.cech import canonical_cover, maximal_cover
from src.corpus import (
    cover_corpus,
    face_families,
    hypergraph_corpus,
    inclusion_corpus,
    is_intersection_closed,
    poset_corpus,
    presheaf_corpus,
)
from src.poset import check_intersection_property


def test_face_families_up_to_relabeling():
    assert face_families(1) == [((0,),)]
    assert face_families(2) == [((0, 1),), ((0,), (0, 1)), ((0,), (1,)), ((0,), (1,), (0, 1))]
    assert len(face_families(3)) == 22


def test_face_families_are_intersection_closed():
    two_edges = ((0, 1), (0, 2))
    assert not is_intersection_closed(two_edges)
    assert two_edges not in face_families(3)
    assert two_edges in face_families(3, intersection_closed=False)
    assert all(is_intersection_closed(f) for f in face_families(4))


def test_hypergraph_corpus_size_and_determinism():
    corpus = hypergraph_corpus(seed=4, exhaustive_vertices=2, samples=3)
    assert len(corpus) == 5 * 4 + 3
    again = hypergraph_corpus(seed=4, exhaustive_vertices=2, samples=3)
    assert [h.to_json() for h in corpus] == [h.to_json() for h in again]


def test_default_corpus_covers_four_vertices():
    corpus = hypergraph_corpus(samples=0)
    assert all(check_intersection_property(h).weak for h in corpus)
    four = [h for h in corpus if len(h.vertices) == 4]
    assert len(four) == len(face_families(4))
    assert {h.cardinalities["1"] for h in four} == {1, 2, 3}
    assert any(h.faces[0] == () for h in four)
    with_empty = [h for h in corpus if len(h.vertices) <= 3 and h.faces[0] == ()]
    assert {h.cardinalities["1"] for h in with_empty} == {1, 2, 3}


def test_posets_satisfy_the_order_axioms():
    for p in poset_corpus(seed=2, count=10):
        assert p.check_invariants() == []


def test_random_presheaves_are_valid():
    for v in presheaf_corpus(seed=5, count=10, max_size=4):
        assert v.validate() is v
        assert v.field.label == "fp:1009"


def test_cover_corpus_starts_with_the_standard_covers(named):
    p = named["boundary"].poset()
    covers = cover_corpus(p, "lower", seed=0, extra=2)
    assert covers[0].members == canonical_cover(p, "lower").members
    assert covers[1].members == maximal_cover(p, "lower").members
    assert len({c.members for c in covers}) == len(covers)


def test_inclusions_are_sub_hypergraphs(named):
    for inclusion in inclusion_corpus(list(named.values()), seed=0):
        assert set(inclusion.small.labels) <= set(inclusion.large.labels)
