"""Injective presheaves, copresheaves, condition G and interaction decompositions."""

from .functor import (
    PosetFunctor,
    InjectivePresheaf,
    Copresheaf,
    constant_presheaf,
    constant_copresheaf,
    indicator_presheaf,
    random_injective_presheaf,
    functor_from_maps,
)
from .free import (
    free_presheaf,
    reduced_presheaf,
    free_copresheaf,
    restricted_copresheaf,
    interaction_dims_via_mobius,
    restricted_index,
)
from .condition_g import ConditionGReport, ConditionGViolation, check_condition_g
from .decomposition import (
    DecompositionFailure,
    DecompositionResult,
    InteractionDecomposition,
    interaction_decomposition,
)

__all__ = [
    "PosetFunctor",
    "InjectivePresheaf",
    "Copresheaf",
    "constant_presheaf",
    "constant_copresheaf",
    "indicator_presheaf",
    "random_injective_presheaf",
    "functor_from_maps",
    "free_presheaf",
    "reduced_presheaf",
    "free_copresheaf",
    "restricted_copresheaf",
    "interaction_dims_via_mobius",
    "restricted_index",
    "ConditionGReport",
    "ConditionGViolation",
    "check_condition_g",
    "DecompositionFailure",
    "DecompositionResult",
    "InteractionDecomposition",
    "interaction_decomposition",
]
