"""Relative Čech cohomology of a pair (B, A) and its long exact sequence."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from ..linalg import Matrix, MatrixBuilder, kernel_basis
from ..presheaf import PosetFunctor
from ..utils.errors import CheckFailure
from ..utils.logging import get_logger
from .complex import CochainComplex, enumerate_tuples, induced_rank, tuple_complex
from .opens import Cover, canonical_cover
from .sections import SectionCache, SectionSpace

logger = get_logger(__name__)


@dataclass
class RelativeReport:
    """Cohomology of B, A and (B, A) with the ranks of i: H(B,A) -> H(B) and r: H(B) -> H(A)."""

    dims_b: List[int]
    dims_a: List[int]
    dims_relative: List[int]
    rank_i: List[int]
    rank_r: List[int]
    violations: List[dict] = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "H_B": self.dims_b,
            "H_A": self.dims_a,
            "H_relative": self.dims_relative,
            "rank_i": self.rank_i,
            "rank_r": self.rank_r,
            "exact": self.exact,
            "violations": self.violations,
        }


def _trace_matrix(space_b: SectionSpace, space_a: SectionSpace, position: Dict[int, int]) -> Matrix:
    """Sections over W restricted to the points of A in W, in the A section basis."""
    f = space_b.functor
    columns = []
    for vector in space_b.subspace.vectors:
        values = {}
        for i_b, i_a in position.items():
            if i_b not in space_b.offsets or i_a not in space_a.offsets:
                continue
            src, dst = space_b.offsets[i_b], space_a.offsets[i_a]
            for d in range(f.dims[i_b]):
                v = vector.get(src + d)
                if v:
                    values[dst + d] = v
        coeffs = space_a.subspace.coordinates(values)
        if coeffs is None:
            raise CheckFailure("Restriction to A is not a section of the trace open")
        columns.append({k: c for k, c in enumerate(coeffs) if c})
    return Matrix.from_columns(columns, space_a.dim, f.field)


@dataclass
class RelativeComplex:
    complex_b: CochainComplex
    complex_a: CochainComplex
    restriction: Dict[int, Matrix]
    kernels: Dict[int, Matrix]

    def relative_cocycles(self, n: int) -> Matrix:
        """Cocycles of the kernel complex, as vectors of C^n(B)."""
        k = self.kernels[n]
        inner = kernel_basis(self.complex_b.delta(n) @ k).basis
        return k @ inner

    def relative_dim(self, n: int) -> int:
        k = self.kernels[n]
        z = k.cols - (self.complex_b.delta(n) @ k).rank()
        b = (self.complex_b.delta(n - 1) @ self.kernels[n - 1]).rank() if n else 0
        return z - b


def relative_complex(functor: PosetFunctor, a_elements: Sequence[str], max_degree: int = 3,
                     cover: Optional[Cover] = None) -> RelativeComplex:
    """
    The kernel of the restriction C(U; F_B) -> C(U cap A; F_A) on alternating complexes.

    Raises:
        CheckFailure: If the restriction is not surjective on some tuple, with the tuple
            and degree as witness
    """
    p = functor.poset
    cover = cover or canonical_cover(p, functor.topology)
    functor_a = functor.restricted_to(a_elements)
    position = {p.index(e): k for k, e in enumerate(functor_a.poset.elements)}

    levels = enumerate_tuples(cover, max_degree, "alternating")
    levels_a = [
        [(u, frozenset(position[i] for i in meet if i in position)) for u, meet in level]
        for level in levels
    ]
    cache_b, cache_a = SectionCache(functor), SectionCache(functor_a)
    complex_b = tuple_complex(cover, cache_b, levels, name="relative-B")
    complex_a = tuple_complex(cover, cache_a, levels_a, name="relative-A")

    restriction, kernels = {}, {}
    for n, (level, level_a) in enumerate(zip(levels, levels_a)):
        builder = MatrixBuilder(complex_a.dim(n), complex_b.dim(n), functor.field)
        for (u, meet), (_, trace), sb, sa in zip(level, level_a, complex_b.summands[n], complex_a.summands[n]):
            if not sa.dim:
                continue
            block = _trace_matrix(cache_b.space(meet), cache_a.space(trace), position)
            if block.rank() != sa.dim:
                witness = {"degree": n, "tuple": list(sb.label), "rank": block.rank(), "dim_A": sa.dim}
                logger.error(f"Restriction to A not surjective at {witness}")
                raise CheckFailure("Restriction to the subspace is not surjective", witness)
            builder.add_block(sa.offset, sb.offset, block)
        restriction[n] = builder.build()
        kernels[n] = kernel_basis(restriction[n]).basis
    return RelativeComplex(complex_b, complex_a, restriction, kernels)


def relative_cohomology(functor: PosetFunctor, a_elements: Sequence[str], max_degree: int = 3,
                        cover: Optional[Cover] = None) -> RelativeReport:
    """
    Dimensions of H(B), H(A), H(B, A) and an exactness check of
    0 -> H^0(B,A) -> H^0(B) -> H^0(A) -> H^1(B,A) -> ...
    as rank identities.
    """
    rel = relative_complex(functor, a_elements, max_degree, cover)
    b, a = rel.complex_b, rel.complex_a
    top = max_degree - 1
    dims_b = b.cohomology_dims(top)
    dims_a = a.cohomology_dims(top)
    dims_rel = [rel.relative_dim(n) for n in range(top + 1)]

    rank_i, rank_r = [], []
    for n in range(top + 1):
        boundaries = b.coboundaries(n).basis
        z_rel = rel.relative_cocycles(n)
        rank_i.append(Matrix.hstack([z_rel, boundaries], rows=b.dim(n), field=b.field).rank() - boundaries.cols)
        rank_r.append(induced_rank(rel.restriction[n], b, a, n))

    violations = []
    if dims_rel[0] != rank_i[0]:
        violations.append({"degree": 0, "check": "H0(B,A) injects into H0(B)"})
    for n in range(top + 1):
        if dims_b[n] != rank_i[n] + rank_r[n]:
            violations.append({"degree": n, "check": "exact at H(B)"})
        if n < top and dims_a[n] - rank_r[n] != dims_rel[n + 1] - rank_i[n + 1]:
            violations.append({"degree": n, "check": "exact at H(A) and H(B,A)"})

    report = RelativeReport(dims_b, dims_a, dims_rel, rank_i, rank_r, violations)
    logger.info(f"Relative cohomology {dims_rel}, exact={report.exact}")
    return report
