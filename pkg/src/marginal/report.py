"""
The linearized marginal problem on a hypergraph.

Pseudomarginal dimensions, the Euler characteristic of the free sheaf against the
Möbius index, the splitting of the free sheaf into its restricted part plus constants,
and surjectivity of restriction along inclusions of hypergraphs.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional

from ..cech import Cover, OpenSet, SectionCache, cech_complex, leray_cover, sections
from ..config.constants import EULER_EXTRA_DEGREES
from ..linalg import FieldSpec, Matrix, MatrixBuilder
from ..poset import Hypergraph, check_intersection_property, components_and_finals, euler_char_mobius, mobius
from ..presheaf import (
    InjectivePresheaf,
    PosetFunctor,
    constant_copresheaf,
    free_copresheaf,
    interaction_decomposition,
    restricted_copresheaf,
    restricted_index,
)
from ..utils.errors import CheckFailure, InputError, StabilizationError
from ..utils.logging import get_logger
from .oracle import brute_force_h0

logger = get_logger(__name__)


def simplex_h0(n: int, cardinality: int) -> int:
    """Global sections of the free sheaf on the full simplex over n vertices."""
    return cardinality ** n


def boundary_h0(n: int, cardinality: int) -> int:
    """Global sections of the free sheaf on the simplex boundary with the empty face."""
    return cardinality ** n - (cardinality - 1) ** n


def boundary_index_without_empty(n: int, cardinality: int) -> int:
    return cardinality ** n - (cardinality - 1) ** n + (-1) ** n


def whole_space(functor: PosetFunctor) -> OpenSet:
    return OpenSet(frozenset(range(len(functor.poset))), functor.topology)


def pseudomarginal_dim(h: Hypergraph, field: Optional[FieldSpec] = None) -> int:
    """dim H^0 of the restricted copresheaf: global sections over the lower space."""
    f = restricted_copresheaf(h, field or FieldSpec.rationals())
    return sections(f, whole_space(f)).dim


def index_formula(h: Hypergraph) -> int:
    """Sum of mu(alpha, beta) N_beta over all pairs."""
    table = mobius(h.poset())
    sizes = [h.n_configurations(f) for f in h.faces]
    return sum(v * sizes[j] for (_, j), v in table.values.items())


@dataclass
class CohomologyProfile:
    """Čech cohomology dims of a functor on its Leray cover, with truncation evidence."""

    dims: List[int]
    cover: str
    complete: bool
    dimension: int
    max_degree: int

    @property
    def highest_nonzero(self) -> Optional[int]:
        return max((n for n, d in enumerate(self.dims) if d), default=None)

    @property
    def stabilized(self) -> bool:
        """Exact, or two consecutive zero degrees past the poset dimension."""
        if self.complete:
            return True
        tail = self.dims[self.dimension + 1:self.dimension + 3]
        return len(tail) == 2 and not any(tail)

    @property
    def euler(self) -> int:
        return sum((-1) ** n * d for n, d in enumerate(self.dims))

    def to_json(self) -> dict:
        return {
            "dims": self.dims,
            "euler": self.euler,
            "cover": self.cover,
            "complete": self.complete,
            "stabilized": self.stabilized,
            "highest_nonzero_degree": self.highest_nonzero,
            "max_degree": self.max_degree,
        }


def cohomology_profile(functor: PosetFunctor, max_degree: Optional[int] = None,
                       cover: Optional[Cover] = None) -> CohomologyProfile:
    """
    Alternating Čech cohomology dims for degrees 0..max_degree-1.

    The cover defaults to the maximal cover when the poset has conditional coproducts
    (lower) or products (upper), else the canonical cover. max_degree defaults to the
    poset dimension plus three.
    """
    p = functor.poset
    max_degree = max_degree or p.dimension + EULER_EXTRA_DEGREES
    if cover is None:
        cover = leray_cover(p, functor.topology)
        kind = "canonical" if cover.names == p.elements else "maximal"
    else:
        kind = "given"
    complex_ = cech_complex(cover, functor, max_degree, "alternating")
    return CohomologyProfile(complex_.cohomology_dims(), kind, complex_.complete, p.dimension, max_degree)


def _require_stable(profile: CohomologyProfile, what: str) -> None:
    if not profile.stabilized:
        witness = {"dims": profile.dims, "dimension": profile.dimension, "max_degree": profile.max_degree}
        logger.error(f"No stabilization evidence for {what}: {witness}")
        raise StabilizationError(f"Cohomology of {what} has not stabilized; raise max_degree", witness)


def euler_char_sheaf(h: Hypergraph, field: Optional[FieldSpec] = None,
                     max_degree: Optional[int] = None) -> CohomologyProfile:
    """
    Euler characteristic of the free copresheaf on the lower space.

    Raises:
        StabilizationError: Without two vanishing degrees past the poset dimension
    """
    profile = cohomology_profile(free_copresheaf(h, field or FieldSpec.rationals()), max_degree)
    _require_stable(profile, "the free sheaf")
    logger.info(f"Euler characteristic of the free sheaf: {profile.euler} (dims {profile.dims})")
    return profile


@dataclass
class SplitReport:
    dims_free: List[int]
    dims_restricted: List[int]
    dims_constant: List[int]
    weak_intersection: bool

    @property
    def violations(self) -> List[dict]:
        found = []
        if self.dims_free[0] != self.dims_restricted[0] + self.dims_constant[0]:
            found.append({"degree": 0, "free": self.dims_free[0],
                          "restricted_plus_constant": self.dims_restricted[0] + self.dims_constant[0]})
        for n in range(1, len(self.dims_free)):
            if self.dims_free[n] != self.dims_constant[n]:
                found.append({"degree": n, "free": self.dims_free[n], "constant": self.dims_constant[n]})
        return found

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "free": self.dims_free,
            "restricted": self.dims_restricted,
            "constant": self.dims_constant,
            "weak_intersection": self.weak_intersection,
            "holds": self.holds,
            "violations": self.violations,
        }


def constant_split(h: Hypergraph, field: Optional[FieldSpec] = None,
                   max_degree: Optional[int] = None) -> SplitReport:
    """
    Compare H(F) with H(restricted) + H(constants) degreewise on the same cover.

    Under weak intersection the restricted sheaf is acyclic, so H^0(F) splits and
    H^n(F) = H^n(constants) for n >= 1.
    """
    field = field or FieldSpec.rationals()
    free = free_copresheaf(h, field)
    cover = leray_cover(free.poset, "lower")
    max_degree = max_degree or free.poset.dimension + EULER_EXTRA_DEGREES
    dims = [
        cohomology_profile(f, max_degree, cover).dims
        for f in (free, restricted_copresheaf(h, field), constant_copresheaf(free.poset, field))
    ]
    report = SplitReport(*dims, weak_intersection=check_intersection_property(h).weak)
    if report.weak_intersection and not report.holds:
        logger.error(f"Splitting fails: {report.violations[0]}")
    return report


@dataclass
class MarginalReport:
    h: Hypergraph
    h0_restricted: int
    h0_free: int
    euler_sheaf: int
    euler_poset: int
    index_rhs: int
    restricted_index_rhs: int
    dims_free: List[int]
    dims_restricted: List[int]
    weak_intersection: bool
    strong_intersection: bool
    complete: bool
    oracle: Dict[str, int] = field(default_factory=dict)

    @property
    def violations(self) -> List[dict]:
        """Identities that must hold under weak intersection."""
        if not self.weak_intersection:
            return []
        checks = {
            "euler_sheaf = index": (self.euler_sheaf, self.index_rhs),
            "euler_sheaf = h0_restricted + euler_poset": (self.euler_sheaf, self.h0_restricted + self.euler_poset),
            "h0_restricted = restricted index": (self.h0_restricted, self.restricted_index_rhs),
        }
        if self.oracle:
            checks["oracle restricted"] = (self.oracle["restricted"], self.h0_restricted)
            checks["oracle free"] = (self.oracle["free"], self.h0_free)
        return [{"check": name, "lhs": lhs, "rhs": rhs} for name, (lhs, rhs) in checks.items() if lhs != rhs]

    def to_json(self) -> dict:
        return {
            "hypergraph": self.h.to_json(),
            "h0_restricted": self.h0_restricted,
            "h0_free": self.h0_free,
            "euler_sheaf": self.euler_sheaf,
            "euler_poset": self.euler_poset,
            "index": self.index_rhs,
            "restricted_index": self.restricted_index_rhs,
            "dims_free": self.dims_free,
            "dims_restricted": self.dims_restricted,
            "weak_intersection": self.weak_intersection,
            "strong_intersection": self.strong_intersection,
            "complete": self.complete,
            "oracle": self.oracle or None,
            "violations": self.violations,
        }


def marginal_report(h: Hypergraph, field: Optional[FieldSpec] = None, max_degree: Optional[int] = None,
                    with_oracle: bool = False) -> MarginalReport:
    """
    All marginal invariants of one hypergraph.

    Raises:
        StabilizationError: If the free sheaf shows no vanishing tail
    """
    field = field or FieldSpec.rationals()
    free = euler_char_sheaf(h, field, max_degree)
    restricted = cohomology_profile(restricted_copresheaf(h, field), free.max_degree)
    intersection = check_intersection_property(h)
    oracle = {}
    if with_oracle:
        oracle = {"free": brute_force_h0(h, False, field), "restricted": brute_force_h0(h, True, field)}
    report = MarginalReport(
        h=h,
        h0_restricted=pseudomarginal_dim(h, field),
        h0_free=free.dims[0],
        euler_sheaf=free.euler,
        euler_poset=euler_char_mobius(h.poset()),
        index_rhs=index_formula(h),
        restricted_index_rhs=restricted_index(h),
        dims_free=free.dims,
        dims_restricted=restricted.dims,
        weak_intersection=intersection.weak,
        strong_intersection=intersection.strong,
        complete=free.complete,
        oracle=oracle,
    )
    if report.violations:
        logger.error(f"Marginal identities fail: {report.violations}")
    else:
        logger.info(f"Marginal report: h0={report.h0_restricted}, euler={report.euler_sheaf}, index={report.index_rhs}")
    return report


@dataclass
class SurjectivityReport:
    source_dim: int
    target_dim: int
    rank: int
    weak_intersection: Dict[str, bool]

    @property
    def surjective(self) -> bool:
        return self.rank == self.target_dim

    def to_json(self) -> dict:
        return {
            "surjective": self.surjective,
            "source_dim": self.source_dim,
            "target_dim": self.target_dim,
            "rank": self.rank,
            "weak_intersection": self.weak_intersection,
        }


def _check_inclusion(a: Hypergraph, b: Hypergraph, vertex_map: Mapping[str, str]) -> List[int]:
    """Index in `b` of the image of each face of `a`; refuses with a witness otherwise."""
    for v in a.vertices:
        if v not in vertex_map:
            raise InputError(f"Vertex map misses vertex {v}")
        if vertex_map[v] not in b.vertices:
            raise InputError(f"Vertex {v} maps to {vertex_map[v]}, unknown in the target")
    faces_b = {frozenset(f): k for k, f in enumerate(b.faces)}
    images = []
    for face, label in zip(a.faces, a.labels):
        image = frozenset(vertex_map[v] for v in face)
        if len(image) != len(face):
            raise CheckFailure("Inclusion is not simplicial", {"face": label, "image": sorted(image)})
        if image not in faces_b:
            raise CheckFailure("Inclusion is not strict", {"face": label, "image": sorted(image)})
        for v in face:
            if a.cardinalities[v] != b.cardinalities[vertex_map[v]]:
                raise CheckFailure(
                    "Cardinalities differ along the vertex map",
                    {"vertex": v, "source": a.cardinalities[v], "target": b.cardinalities[vertex_map[v]]},
                )
        images.append(faces_b[image])
    return images


def _transport(a: Hypergraph, b: Hypergraph, alpha: int, beta: int, vertex_map: Mapping[str, str],
               field: FieldSpec) -> Matrix:
    """Sum-zero coordinates of f(alpha) read as sum-zero coordinates of alpha."""
    face_a, face_b = a.faces[alpha], b.faces[beta]
    source_of = {vertex_map[v]: k for k, v in enumerate(face_a)}
    rows = {}
    for x_index, x in enumerate(a.configurations(face_a)):
        if x_index == 0:
            continue
        y = tuple(x[source_of[w]] for w in face_b)
        rows[x_index - 1] = {b.configuration_index(y, face_b) - 1: field.one}
    return Matrix(a.n_configurations(face_a) - 1, b.n_configurations(face_b) - 1, field, rows)


def marginal_surjectivity(a: Hypergraph, b: Hypergraph, field: Optional[FieldSpec] = None,
                          vertex_map: Optional[Mapping[str, str]] = None) -> SurjectivityReport:
    """
    Rank of the restriction of global restricted-sheaf sections from `b` to `a`.

    The vertex map defaults to the identity on names.

    Raises:
        CheckFailure: If the inclusion is not strict, not simplicial, or changes a
            cardinality, with the offending face or vertex as witness
    """
    field = field or FieldSpec.rationals()
    vertex_map = dict(vertex_map) if vertex_map is not None else {v: v for v in a.vertices}
    images = _check_inclusion(a, b, vertex_map)

    f_a, f_b = restricted_copresheaf(a, field), restricted_copresheaf(b, field)
    space_a = sections(f_a, whole_space(f_a))
    space_b = sections(f_b, whole_space(f_b))
    total_a = sum(f_a.dims)
    builder = MatrixBuilder(total_a, space_b.dim, field)
    for alpha, beta in enumerate(images):
        block = _transport(a, b, alpha, beta, vertex_map, field) @ space_b.evaluation(beta)
        builder.add_block(space_a.offsets[alpha], 0, block)
    families = builder.build()

    columns = []
    for vector in families.columns():
        coeffs = space_a.subspace.coordinates(vector)
        if coeffs is None:
            raise CheckFailure("Restricted family is not a section over the smaller hypergraph")
        columns.append({k: c for k, c in enumerate(coeffs) if c})
    restriction = Matrix.from_columns(columns, space_a.dim, field)

    report = SurjectivityReport(
        source_dim=space_b.dim,
        target_dim=space_a.dim,
        rank=restriction.rank(),
        weak_intersection={
            "source": check_intersection_property(b).weak,
            "target": check_intersection_property(a).weak,
        },
    )
    logger.info(f"Restriction {report.source_dim} -> {report.target_dim} has rank {report.rank}")
    return report


@dataclass
class FinalsReport:
    by_formula: int
    by_sections: int
    finals: List[Optional[str]]

    @property
    def agrees(self) -> bool:
        return self.by_formula == self.by_sections

    def to_json(self) -> dict:
        return {
            "by_formula": self.by_formula,
            "by_sections": self.by_sections,
            "finals": self.finals,
            "agrees": self.agrees,
        }


def h0_via_finals(v: InjectivePresheaf) -> FinalsReport:
    """
    Global sections over the upper space as the sum of dim S_gamma over the final
    elements of the connected components.

    Raises:
        CheckFailure: If the presheaf admits no interaction decomposition
    """
    result = interaction_decomposition(v, with_projectors=False)
    if not result.succeeded:
        raise CheckFailure("The presheaf has no interaction decomposition", result.failure.to_json())
    dims = result.decomposition.dims()
    report = components_and_finals(v.poset)
    by_formula = sum(dims[g] for g in report.final_elements)
    by_sections = SectionCache(v).space(range(len(v.poset))).dim
    return FinalsReport(by_formula, by_sections, report.finals)
