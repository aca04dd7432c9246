"""Prism homotopy between the cochain maps of two projections onto a coarser cover."""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from ..cech import (
    Cover,
    GradedMap,
    SectionCache,
    cech_complex,
    is_refinement,
    projection_map,
    refinement_map,
)
from ..linalg import Matrix, MatrixBuilder
from ..presheaf import PosetFunctor
from ..utils.errors import CheckFailure, InputError
from ..utils.logging import get_logger

logger = get_logger(__name__)


@dataclass
class PrismReport:
    identity_degrees: List[int] = field(default_factory=list)
    cocycles_to_coboundaries: List[int] = field(default_factory=list)
    lam: List[int] = field(default_factory=list)
    mu: List[int] = field(default_factory=list)
    failure: Optional[dict] = None

    @property
    def verified(self) -> bool:
        return self.failure is None

    def to_json(self) -> dict:
        return {
            "verified": self.verified,
            "lambda": self.lam,
            "mu": self.mu,
            "identity_degrees": self.identity_degrees,
            "cocycles_to_coboundaries": self.cocycles_to_coboundaries,
            "failure": self.failure,
        }


def projection_homotopy(fine: Cover, coarse: Cover, functor: PosetFunctor, max_degree: int = 3,
                        lam: Optional[Sequence[int]] = None, mu: Optional[Sequence[int]] = None,
                        raise_on_failure: bool = True) -> PrismReport:
    """
    H(c)(u) = sum over j of (-1)^j c(lam U_0, ..., lam U_j, mu U_j, ..., mu U_n) restricted
    to U_u, checked against delta H + H delta = mu^* - lam^* on the full complexes.

    lam and mu default to the first-containing and last-containing projections.

    Raises:
        InputError: If `fine` does not refine `coarse` or a projection is invalid
        CheckFailure: When the identity fails, with degree and first differing entry
    """
    if not is_refinement(fine, coarse):
        raise InputError("The first cover does not refine the second")
    lam = list(lam) if lam is not None else projection_map(fine, coarse, "first")
    mu = list(mu) if mu is not None else projection_map(fine, coarse, "last")
    for name, proj in (("lambda", lam), ("mu", mu)):
        if len(proj) != len(fine) or any(
            not fine.members[k] <= coarse.members[t] for k, t in enumerate(proj)
        ):
            raise InputError(f"{name} is not a projection of the fine cover into the coarse one")

    cache = SectionCache(functor)
    k_fine = cech_complex(fine, functor, max_degree, "full", cache)
    k_coarse = cech_complex(coarse, functor, max_degree + 1, "full", cache)
    lam_star = refinement_map(fine, coarse, lam, functor, k_fine, k_coarse, cache)
    mu_star = refinement_map(fine, coarse, mu, functor, k_fine, k_coarse, cache)

    prism = GradedMap("prism", -1)
    for n in range(max_degree + 1):
        builder = MatrixBuilder(k_fine.dim(n), k_coarse.dim(n + 1), functor.field)
        for target in k_fine.summands[n]:
            if not target.dim:
                continue
            u = target.key
            for j in range(n + 1):
                image = tuple(lam[k] for k in u[:j + 1]) + tuple(mu[k] for k in u[j:])
                source = k_coarse.summand(n + 1, image)
                if source is None or not source.dim:
                    continue
                block = cache.restriction(coarse.intersection(image), fine.intersection(u))
                builder.add_block(target.offset, source.offset, block, -1 if j % 2 else 1)
        prism.blocks[n] = builder.build()

    report = PrismReport(lam=lam, mu=mu)
    for n in range(max_degree):
        lhs = mu_star[n] - lam_star[n]
        rhs = prism[n] @ k_coarse.delta(n)
        if n > 0:
            rhs = rhs + k_fine.delta(n - 1) @ prism[n - 1]
        if lhs != rhs:
            report.failure = {"identity": "dH + Hd = mu* - lam*", "degree": n, "entry": list(lhs.first_difference(rhs))}
            break
        report.identity_degrees.append(n)

        z = k_coarse.cocycles(n).basis
        b = k_fine.coboundaries(n).basis
        moved = lhs @ z
        if Matrix.hstack([b, moved], rows=k_fine.dim(n), field=functor.field).rank() != b.cols:
            report.failure = {"identity": "mu* - lam* on cocycles", "degree": n}
            break
        report.cocycles_to_coboundaries.append(n)

    if report.failure is not None:
        logger.error(f"Prism homotopy check failed: {report.failure}")
        if raise_on_failure:
            raise CheckFailure("Prism homotopy identity fails", report.failure)
    else:
        logger.info(f"Prism homotopy verified up to degree {max_degree - 1}")
    return report
