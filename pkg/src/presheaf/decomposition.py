"""Interaction decomposition of an injective presheaf by recurrence on dimension."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..linalg import Matrix, Subspace
from ..utils.logging import get_logger
from .functor import InjectivePresheaf, indicator_presheaf

logger = get_logger(__name__)


@dataclass(frozen=True)
class DecompositionFailure:
    """The first element where the images of the interaction spaces are not a direct sum."""

    element: str
    dim: int
    dim_sum: int
    rank: int

    def to_json(self) -> dict:
        return {"element": self.element, "dim": self.dim, "dim_sum": self.dim_sum, "rank": self.rank}


@dataclass
class InteractionDecomposition:
    """
    S_a inside V_a for every element, with V_a = direct sum of j_ab(S_b) over a -> b, and
    the projectors e_{b|a} onto the summands.
    """

    presheaf: InjectivePresheaf
    spaces: Dict[int, Subspace]
    projectors: Dict[Tuple[int, int], Matrix] = field(default_factory=dict)

    def dims(self) -> Dict[str, int]:
        p = self.presheaf.poset
        return {p.elements[i]: self.spaces[i].dim for i in range(len(p))}

    def projector(self, a: str, b: str) -> Matrix:
        p = self.presheaf.poset
        return self.projectors[(p.index(a), p.index(b))]

    def component(self, gamma: str) -> InjectivePresheaf:
        """The presheaf a -> j_{a gamma}(S_gamma), isomorphic to an indicator presheaf."""
        v = self.presheaf
        return indicator_presheaf(v.poset, gamma, v.field, self.spaces[v.poset.index(gamma)].dim)

    def law_violations(self) -> List[str]:
        """Idempotence, orthogonality, partition of identity and naturality of the projectors."""
        v = self.presheaf
        p = v.poset
        problems = []
        for i in range(len(p)):
            below = sorted(p.down_indices(i))
            identity = Matrix.identity(v.dims[i], v.field)
            total = Matrix.zeros(v.dims[i], v.dims[i], v.field)
            for j in below:
                e = self.projectors[(i, j)]
                total = total + e
                if e @ e != e:
                    problems.append(f"e_{{{p.elements[j]}|{p.elements[i]}}} is not idempotent")
                for k in below:
                    if k != j and not (e @ self.projectors[(i, k)]).is_zero():
                        problems.append(
                            f"e_{{{p.elements[j]}|{p.elements[i]}}} e_{{{p.elements[k]}|{p.elements[i]}}} != 0"
                        )
            if total != identity:
                problems.append(f"projectors at {p.elements[i]} do not sum to the identity")
            for j in p.strict_targets(i):
                inclusion = v.map_idx(i, j)
                for k in below:
                    lhs = self.projectors[(i, k)] @ inclusion
                    if p.arrow_idx(j, k):
                        rhs = inclusion @ self.projectors[(j, k)]
                        if lhs != rhs:
                            problems.append(
                                f"naturality fails for {p.elements[i]}->{p.elements[j]} at {p.elements[k]}"
                            )
                    elif not lhs.is_zero():
                        problems.append(
                            f"e_{{{p.elements[k]}|{p.elements[i]}}} does not vanish on the image of {p.elements[j]}"
                        )
        return problems

    def to_json(self) -> dict:
        v = self.presheaf
        p = v.poset
        return {
            "dims": self.dims(),
            "bases": {
                p.elements[i]: [[v.field.to_json(x) for x in row] for row in s.basis.transpose().to_dense()]
                for i, s in self.spaces.items()
            },
        }


@dataclass(frozen=True)
class DecompositionResult:
    decomposition: Optional[InteractionDecomposition] = None
    failure: Optional[DecompositionFailure] = None

    @property
    def succeeded(self) -> bool:
        return self.failure is None

    def to_json(self) -> dict:
        if self.failure is not None:
            return {"succeeded": False, "failure": self.failure.to_json()}
        return {"succeeded": True, **self.decomposition.to_json()}


def _summand_basis(v: InjectivePresheaf, spaces: Dict[int, Subspace], i: int) -> Tuple[Matrix, List[Tuple[int, int]]]:
    """Columns j_ab(basis of S_b) for every b below a, and the column range of each b."""
    blocks, ranges, offset = [], [], 0
    for j in sorted(v.poset.down_indices(i)):
        block = v.map_idx(i, j) @ spaces[j].basis
        blocks.append(block)
        ranges.append((j, offset))
        offset += block.cols
    return Matrix.hstack(blocks, rows=v.dims[i], field=v.field), ranges


def interaction_decomposition(v: InjectivePresheaf, with_projectors: bool = True) -> DecompositionResult:
    """
    Build S_a as the canonical complement of V'_a = sum of V_ab over strict b, in
    increasing dimension order.

    At each a the images j_ab(S_b) must have dimensions adding up to dim V_a and a
    concatenated basis of full rank; otherwise the result carries the failure. Failure
    happens exactly when condition G fails.
    """
    p = v.poset
    spaces: Dict[int, Subspace] = {}
    bases: Dict[int, Tuple[Matrix, List[Tuple[int, int]]]] = {}
    for i in p.order_by_dimension():
        lower = Subspace.zero(v.dims[i], v.field)
        for j in p.strict_targets(i):
            lower = lower.sum(v.image_subspace(i, j))
        spaces[i] = lower.canonical_complement()

        basis, ranges = _summand_basis(v, spaces, i)
        r = basis.rank()
        if basis.cols != v.dims[i] or r != v.dims[i]:
            failure = DecompositionFailure(p.elements[i], v.dims[i], basis.cols, r)
            logger.info(f"Decomposition fails at {failure.element}: dims {failure.dim_sum}, rank {r}")
            return DecompositionResult(failure=failure)
        bases[i] = (basis, ranges)

    decomposition = InteractionDecomposition(v, spaces)
    if with_projectors:
        for i, (basis, ranges) in bases.items():
            inverse = basis.inverse()
            for j, offset in ranges:
                size = spaces[j].dim
                selector = Matrix(v.dims[i], v.dims[i], v.field,
                                  {offset + k: {offset + k: v.field.one} for k in range(size)})
                decomposition.projectors[(i, j)] = basis @ selector @ inverse
    logger.info(f"Decomposition succeeded with dims {decomposition.dims()}")
    return DecompositionResult(decomposition=decomposition)
