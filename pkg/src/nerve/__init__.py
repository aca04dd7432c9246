"""Nerve complexes, the intersection poset of a cover and the Čech/nerve comparison maps."""

from .chains import (
    CHAIN_MODES,
    face,
    degeneracy,
    is_chain,
    enumerate_chains,
    simplicial_identity_violations,
)
from .complex import LocalSystem, functor_system, local_system_complex, nerve_complex
from .covering import IntersectionPoset, intersection_poset, projection
from .homotopy import (
    HomotopyCheck,
    HomotopyReport,
    SubdivisionComparison,
    permutation_sign,
    pi_star,
    subdivision_sd,
    homotopies_dk_dn,
    verify_homotopy,
)
from .comparison import ComparisonReport, comparison_map, compare_cech_nerve
from .prism import PrismReport, projection_homotopy

__all__ = [
    "CHAIN_MODES",
    "face",
    "degeneracy",
    "is_chain",
    "enumerate_chains",
    "simplicial_identity_violations",
    "LocalSystem",
    "functor_system",
    "local_system_complex",
    "nerve_complex",
    "IntersectionPoset",
    "intersection_poset",
    "projection",
    "HomotopyCheck",
    "HomotopyReport",
    "SubdivisionComparison",
    "permutation_sign",
    "pi_star",
    "subdivision_sd",
    "homotopies_dk_dn",
    "verify_homotopy",
    "ComparisonReport",
    "comparison_map",
    "compare_cech_nerve",
    "PrismReport",
    "projection_homotopy",
]
