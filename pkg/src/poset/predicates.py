"""Structural predicates of finite posets: conditional (co)products, coverings, components."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .poset import Poset
from ..utils.logging import get_logger

logger = get_logger(__name__)


def coproduct_idx(p: Poset, i: int, j: int) -> Optional[int]:
    """
    The common target mapping to every other common target, if any.

    For faces this is the intersection.
    """
    common = p.down_indices(i) & p.down_indices(j)
    for k in sorted(common):
        if common <= p.down_indices(k):
            return k
    return None


def product_idx(p: Poset, i: int, j: int) -> Optional[int]:
    """The common source receiving from every other common source (the union, for faces)."""
    common = p.up_indices(i) & p.up_indices(j)
    for k in sorted(common):
        if common <= p.up_indices(k):
            return k
    return None


def coproduct(p: Poset, a: str, b: str) -> Optional[str]:
    k = coproduct_idx(p, p.index(a), p.index(b))
    return None if k is None else p.elements[k]


def product(p: Poset, a: str, b: str) -> Optional[str]:
    k = product_idx(p, p.index(a), p.index(b))
    return None if k is None else p.elements[k]


def _conditional_witness(p: Poset, use_products: bool) -> Optional[Tuple[str, str]]:
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if use_products:
                has_common = bool(p.up_indices(i) & p.up_indices(j))
                found = product_idx(p, i, j)
            else:
                has_common = bool(p.down_indices(i) & p.down_indices(j))
                found = coproduct_idx(p, i, j)
            if has_common and found is None:
                return p.elements[i], p.elements[j]
    return None


@dataclass(frozen=True)
class StructuralReport:
    conditional_coproducts: bool
    conditional_products: bool
    coproduct_witness: Optional[Tuple[str, str]]
    product_witness: Optional[Tuple[str, str]]
    lower_finitely_covered: bool
    upper_finitely_covered: bool
    lower_covering_set: List[str]
    upper_covering_set: List[str]
    dimension_of: Dict[str, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "conditional_coproducts": self.conditional_coproducts,
            "conditional_products": self.conditional_products,
            "coproduct_witness": list(self.coproduct_witness) if self.coproduct_witness else None,
            "product_witness": list(self.product_witness) if self.product_witness else None,
            "lower_finitely_covered": self.lower_finitely_covered,
            "upper_finitely_covered": self.upper_finitely_covered,
            "lower_covering_set": self.lower_covering_set,
            "upper_covering_set": self.upper_covering_set,
            "dimension_of": self.dimension_of,
        }


def maximal_elements(p: Poset) -> List[str]:
    """Elements receiving no strict arrow; their lower opens cover the space."""
    return [p.elements[i] for i in range(len(p)) if p.up_indices(i) == {i}]


def minimal_elements(p: Poset) -> List[str]:
    """Elements with no strict arrow out; their upper opens cover the space."""
    return [p.elements[i] for i in range(len(p)) if p.down_indices(i) == {i}]


def structural_predicates(p: Poset) -> StructuralReport:
    """
    Conditional (co)products, finite coverings and dimensions.

    Finite posets are always lower and upper finitely covered; the minimal covering sets
    are the maximal resp. minimal elements.
    """
    coproduct_witness = _conditional_witness(p, use_products=False)
    product_witness = _conditional_witness(p, use_products=True)
    report = StructuralReport(
        conditional_coproducts=coproduct_witness is None,
        conditional_products=product_witness is None,
        coproduct_witness=coproduct_witness,
        product_witness=product_witness,
        lower_finitely_covered=True,
        upper_finitely_covered=True,
        lower_covering_set=maximal_elements(p),
        upper_covering_set=minimal_elements(p),
        dimension_of={e: d for e, d in zip(p.elements, p.dimensions)},
    )
    logger.debug(
        f"Predicates: coproducts={report.conditional_coproducts}, products={report.conditional_products}"
    )
    return report


@dataclass(frozen=True)
class ComponentReport:
    components: List[List[str]]
    finals: List[Optional[str]]

    @property
    def final_elements(self) -> List[str]:
        return [f for f in self.finals if f is not None]

    def to_json(self) -> dict:
        return {"components": self.components, "finals": self.finals}


def components_and_finals(p: Poset) -> ComponentReport:
    """
    Connected components of the arrow relation and, per component, the element every
    member maps to (when it exists).
    """
    parent = list(range(len(p)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(p)):
        for j in p.down_indices(i):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)

    groups: Dict[int, List[int]] = {}
    for i in range(len(p)):
        groups.setdefault(find(i), []).append(i)

    components, finals = [], []
    for members in sorted(groups.values()):
        member_set = set(members)
        final = next((g for g in members if member_set <= p.up_indices(g)), None)
        components.append([p.elements[i] for i in members])
        finals.append(None if final is None else p.elements[final])
    return ComponentReport(components, finals)
