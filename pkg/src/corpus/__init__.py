"""Built-in corpora for the invariant suites."""

from .generator import (
    Inclusion,
    cover_corpus,
    face_families,
    hypergraph_corpus,
    inclusion_corpus,
    is_intersection_closed,
    named_hypergraphs,
    poset_corpus,
    presheaf_corpus,
    random_cover,
    random_hypergraph,
    random_poset,
)

__all__ = [
    "Inclusion",
    "cover_corpus",
    "face_families",
    "hypergraph_corpus",
    "inclusion_corpus",
    "is_intersection_closed",
    "named_hypergraphs",
    "poset_corpus",
    "presheaf_corpus",
    "random_cover",
    "random_hypergraph",
    "random_poset",
]
