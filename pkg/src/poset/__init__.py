"""Finite posets, hypergraphs, Möbius functions and structural predicates."""

from .poset import Poset, poset_from_generators, down_set, up_set
from .hypergraph import (
    Hypergraph,
    IntersectionReport,
    check_intersection_property,
    face_label,
    poset_from_hypergraph,
)
from .mobius import (
    MobiusTable,
    mobius,
    euler_char_mobius,
    euler_char_hall,
    euler_char_bounded,
    chain_counts,
    face_count_euler,
)
from .predicates import (
    StructuralReport,
    ComponentReport,
    structural_predicates,
    components_and_finals,
    coproduct,
    product,
    maximal_elements,
    minimal_elements,
)

__all__ = [
    "Poset",
    "poset_from_generators",
    "down_set",
    "up_set",
    "Hypergraph",
    "IntersectionReport",
    "check_intersection_property",
    "face_label",
    "poset_from_hypergraph",
    "MobiusTable",
    "mobius",
    "euler_char_mobius",
    "euler_char_hall",
    "euler_char_bounded",
    "chain_counts",
    "face_count_euler",
    "StructuralReport",
    "ComponentReport",
    "structural_predicates",
    "components_and_finals",
    "coproduct",
    "product",
    "maximal_elements",
    "minimal_elements",
]
