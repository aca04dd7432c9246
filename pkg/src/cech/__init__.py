"""Open covers, section spaces and Čech cochain complexes of finite Alexandrov spaces."""

from .opens import (
    OpenSet,
    Cover,
    basis_open,
    is_open,
    make_cover,
    canonical_cover,
    maximal_cover,
    leray_cover,
    is_refinement,
    refining_pairs,
    projection_map,
)
from .sections import SectionSpace, SectionCache, sections
from .complex import (
    MODES,
    Summand,
    CochainComplex,
    GradedMap,
    induced_rank,
    chain_map_violations,
    require_chain_map,
    enumerate_tuples,
    tuple_complex,
    cech_complex,
    refinement_map,
)
from .relative import RelativeComplex, RelativeReport, relative_complex, relative_cohomology

__all__ = [
    "OpenSet",
    "Cover",
    "basis_open",
    "is_open",
    "make_cover",
    "canonical_cover",
    "maximal_cover",
    "leray_cover",
    "is_refinement",
    "refining_pairs",
    "projection_map",
    "SectionSpace",
    "SectionCache",
    "sections",
    "MODES",
    "Summand",
    "CochainComplex",
    "GradedMap",
    "induced_rank",
    "chain_map_violations",
    "require_chain_map",
    "enumerate_tuples",
    "tuple_complex",
    "cech_complex",
    "refinement_map",
    "RelativeComplex",
    "RelativeReport",
    "relative_complex",
    "relative_cohomology",
]
