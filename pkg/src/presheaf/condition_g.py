"""Condition G: the sum-intersection property characterizing decomposable presheaves."""

from dataclasses import dataclass, field
from typing import List

from ..linalg import Subspace
from ..utils.logging import get_logger
from .functor import InjectivePresheaf

logger = get_logger(__name__)


@dataclass(frozen=True)
class ConditionGViolation:
    alpha: str
    beta: str
    witness: list

    def to_json(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta, "witness": self.witness}


@dataclass(frozen=True)
class ConditionGReport:
    holds: bool
    violations: List[ConditionGViolation] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"holds": self.holds, "violations": [v.to_json() for v in self.violations]}


def _image_sum(v: InjectivePresheaf, i: int, targets) -> Subspace:
    total = Subspace.zero(v.dims[i], v.field)
    for j in targets:
        total = total.sum(v.image_subspace(i, j))
    return total


def check_condition_g(v: InjectivePresheaf) -> ConditionGReport:
    """
    For each strict arrow a -> b test
    V_ab ∩ (sum of V_ac, c strict below a, c not below b) ⊆ sum of V_ac, c strict below a and b.

    The reflexive arrow a -> a always passes. One witness per failing arrow: the first
    basis vector of the intersection outside the right-hand sum, in V_a coordinates.
    """
    p = v.poset
    violations = []
    for i in range(len(p)):
        strict = p.strict_targets(i)
        for j in strict:
            lhs_targets = [k for k in strict if not p.arrow_idx(k, j)]
            if not lhs_targets:
                continue
            intersection = v.image_subspace(i, j).intersect(_image_sum(v, i, lhs_targets))
            if not intersection.dim:
                continue
            rhs = _image_sum(v, i, [k for k in strict if k != j and p.arrow_idx(j, k)])
            for vector in intersection.vectors:
                if not rhs.contains_vector(vector):
                    witness = [v.field.to_json(vector.get(k, v.field.zero)) for k in range(v.dims[i])]
                    violations.append(ConditionGViolation(p.elements[i], p.elements[j], witness))
                    break
    report = ConditionGReport(not violations, violations)
    logger.info(f"Condition G {'holds' if report.holds else 'fails'} ({len(violations)} violations)")
    return report
