"""Čech cohomology of the canonical upper cover against the nerve cohomology of the poset."""

from dataclasses import dataclass, field
from typing import List

from ..cech import CochainComplex, GradedMap, SectionCache, canonical_cover, cech_complex, chain_map_violations, induced_rank
from ..linalg import MatrixBuilder
from ..poset import structural_predicates
from ..presheaf import InjectivePresheaf
from ..utils.errors import CheckFailure, InputError
from ..utils.logging import get_logger
from .complex import nerve_complex
from .homotopy import permutation_sign

logger = get_logger(__name__)


@dataclass
class ComparisonReport:
    mode: str
    cech_dims: List[int]
    nerve_dims: List[int]
    induced_ranks: List[int]
    chain_map: bool
    violations: List[dict] = field(default_factory=list)

    @property
    def isomorphic(self) -> bool:
        return self.chain_map and not self.violations

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "cech": self.cech_dims,
            "nerve": self.nerve_dims,
            "induced_ranks": self.induced_ranks,
            "chain_map": self.chain_map,
            "isomorphic": self.isomorphic,
            "violations": self.violations,
        }


def comparison_map(cech: CochainComplex, nerve: CochainComplex, cache: SectionCache,
                   alternating: bool) -> GradedMap:
    """
    j^*(c)(a_0, ..., a_n) = c(U^{a_0}, ..., U^{a_n}) evaluated at a_n.

    In alternating mode the tuple is sorted into cover order and the sign of the sort
    is applied.
    """
    cover_members = canonical_cover(cache.functor.poset, "upper").members
    result = GradedMap("comparison", 0)
    for n in range(min(cech.max_degree, nerve.max_degree) + 1):
        builder = MatrixBuilder(nerve.dim(n), cech.dim(n), cache.functor.field)
        for target in nerve.summands[n]:
            chain = target.key
            if not target.dim:
                continue
            if alternating:
                order = sorted(range(len(chain)), key=lambda k: chain[k])
                key, sign = tuple(chain[k] for k in order), permutation_sign(tuple(order))
            else:
                key, sign = chain, 1
            source = cech.summand(n, key)
            if source is None or not source.dim:
                continue
            support = cover_members[chain[-1]]
            builder.add_block(target.offset, source.offset, cache.space(support).evaluation(chain[-1]), sign)
        result.blocks[n] = builder.build()
    return result


def compare_cech_nerve(presheaf: InjectivePresheaf, max_degree: int = 3, mode: str = "alternating",
                       raise_on_failure: bool = True) -> ComparisonReport:
    """
    Build C(K(U^A); G) and C(N(A); G) with the comparison map j^* and check that j^*
    commutes with the differentials and induces isomorphisms on H^n, n < max_degree.

    Raises:
        CheckFailure: When the poset lacks conditional products (witness pair) or the
            comparison fails
    """
    if presheaf.topology != "upper":
        raise InputError("The comparison runs on presheaves over the upper topology")
    p = presheaf.poset
    predicates = structural_predicates(p)
    if not predicates.conditional_products:
        raise CheckFailure("The poset lacks conditional products", list(predicates.product_witness))

    alternating = mode == "alternating"
    cache = SectionCache(presheaf)
    cech = cech_complex(canonical_cover(p, "upper"), presheaf, max_degree, mode, cache)
    nerve = nerve_complex(p, presheaf, "upper", max_degree, "nondegenerate" if alternating else "full")
    j_star = comparison_map(cech, nerve, cache, alternating)

    chain_ok = not chain_map_violations(j_star, cech, nerve)
    cech_dims = cech.cohomology_dims()
    nerve_dims = nerve.cohomology_dims()
    ranks = [induced_rank(j_star[n], cech, nerve, n) for n in range(max_degree)]
    violations = [
        {"degree": n, "cech": c, "nerve": v, "rank": r}
        for n, (c, v, r) in enumerate(zip(cech_dims, nerve_dims, ranks))
        if not c == v == r
    ]
    report = ComparisonReport(mode, cech_dims, nerve_dims, ranks, chain_ok, violations)
    if not report.isomorphic:
        witness = violations[0] if violations else {"chain_map": False}
        logger.error(f"Čech/nerve comparison failed: {witness}")
        if raise_on_failure:
            raise CheckFailure("The comparison map is not a quasi-isomorphism", witness)
    else:
        logger.info(f"Čech and nerve cohomology agree: {cech_dims}")
    return report
