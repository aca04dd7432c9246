"""Pseudomarginals, Euler characteristics of the free sheaf and the brute-force oracle."""

from .oracle import brute_force_h0
from .report import (
    CohomologyProfile,
    FinalsReport,
    MarginalReport,
    SplitReport,
    SurjectivityReport,
    boundary_h0,
    boundary_index_without_empty,
    cohomology_profile,
    constant_split,
    euler_char_sheaf,
    h0_via_finals,
    index_formula,
    marginal_report,
    marginal_surjectivity,
    pseudomarginal_dim,
    simplex_h0,
)

__all__ = [
    "brute_force_h0",
    "CohomologyProfile",
    "FinalsReport",
    "MarginalReport",
    "SplitReport",
    "SurjectivityReport",
    "boundary_h0",
    "boundary_index_without_empty",
    "cohomology_profile",
    "constant_split",
    "euler_char_sheaf",
    "h0_via_finals",
    "index_formula",
    "marginal_report",
    "marginal_surjectivity",
    "pseudomarginal_dim",
    "simplex_h0",
]
