"""Cochain complexes with exact differentials, and the Čech complex of a cover."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..linalg import FieldSpec, Matrix, MatrixBuilder, Subspace, image_basis, kernel_basis
from ..presheaf import PosetFunctor
from ..utils.errors import CheckFailure, InputError
from ..utils.logging import get_logger
from .opens import Cover
from .sections import SectionCache

logger = get_logger(__name__)

MODES = ("full", "alternating")


@dataclass(frozen=True)
class Summand:
    """One direct summand of a cochain space: a labelled cell with its local dimension."""

    key: Tuple
    label: Tuple[str, ...]
    dim: int
    offset: int

    def to_json(self) -> dict:
        return {"cell": list(self.label), "dim": self.dim}


class CochainComplex:
    """
    Cochain spaces C^0..C^max_degree given as lists of summands, and differentials
    delta_n : C^n -> C^{n+1} for n < max_degree.
    """

    def __init__(self, field: FieldSpec, summands: List[List[Summand]], deltas: List[Matrix],
                 name: str = "", complete: bool = False):
        if len(deltas) != len(summands) - 1:
            raise InputError(f"{len(summands)} cochain spaces need {len(summands) - 1} differentials")
        self.field = field
        self.summands = summands
        self.deltas = deltas
        self.name = name
        self.complete = complete
        self._index = [{s.key: k for k, s in enumerate(level)} for level in summands]
        self._ranks: Dict[int, int] = {}

    @property
    def max_degree(self) -> int:
        return len(self.summands) - 1

    def __repr__(self) -> str:
        return f"CochainComplex({self.name or 'unnamed'}, dims={self.dims()})"

    def dim(self, n: int) -> int:
        level = self.summands[n]
        return level[-1].offset + level[-1].dim if level else 0

    def dims(self) -> List[int]:
        return [self.dim(n) for n in range(len(self.summands))]

    def summand(self, n: int, key: Tuple) -> Optional[Summand]:
        k = self._index[n].get(key)
        return None if k is None else self.summands[n][k]

    def delta(self, n: int) -> Matrix:
        """delta_n : C^n -> C^{n+1}; the zero map out of C^{-1} is delta_{-1}."""
        if n == -1:
            return Matrix.zeros(self.dim(0), 0, self.field)
        if not 0 <= n < len(self.deltas):
            raise InputError(f"Differential of degree {n} not built (max_degree {self.max_degree})")
        return self.deltas[n]

    def rank_delta(self, n: int) -> int:
        if n == -1:
            return 0
        if n not in self._ranks:
            self._ranks[n] = self.delta(n).rank()
        return self._ranks[n]

    def _check_degree(self, n: int) -> None:
        if not 0 <= n < self.max_degree:
            raise InputError(
                f"Degree {n} out of range: cohomology is reliable only below max_degree {self.max_degree}"
            )

    def cohomology_dim(self, n: int) -> int:
        self._check_degree(n)
        return self.dim(n) - self.rank_delta(n) - self.rank_delta(n - 1)

    def cohomology_dims(self, up_to: Optional[int] = None) -> List[int]:
        """dim H^n = dim ker delta_n - rank delta_{n-1} for n = 0..up_to."""
        top = self.max_degree - 1 if up_to is None else up_to
        self._check_degree(top)
        dims = [self.cohomology_dim(n) for n in range(top + 1)]
        logger.debug(f"{self.name or 'complex'}: H dims {dims}")
        return dims

    def cocycles(self, n: int) -> Subspace:
        self._check_degree(n)
        return kernel_basis(self.delta(n))

    def coboundaries(self, n: int) -> Subspace:
        self._check_degree(n)
        return image_basis(self.delta(n - 1))

    def delta_squared_violations(self) -> List[int]:
        """Degrees n with delta_{n+1} delta_n != 0."""
        return [n for n in range(len(self.deltas) - 1) if not (self.deltas[n + 1] @ self.deltas[n]).is_zero()]

    def to_json(self) -> dict:
        return {
            str(n): {
                "summands": [s.to_json() for s in level],
                "delta": self.deltas[n].to_json() if n < len(self.deltas) else None,
            }
            for n, level in enumerate(self.summands)
        }


def induced_rank(f: Matrix, source: CochainComplex, target: CochainComplex, n: int) -> int:
    """
    Rank of the map induced on H^n by a degree-n component f of a chain map.

    rank([f Z_n | B_n]) - rank(B_n) with Z_n the source cocycles and B_n the target
    coboundaries.
    """
    z = source.cocycles(n).basis
    b = target.coboundaries(n).basis
    return Matrix.hstack([f @ z, b], rows=target.dim(n), field=target.field).rank() - b.cols


@dataclass
class GradedMap:
    """Degreewise matrices between two complexes, shifting degree by `shift` (0 or -1)."""

    name: str
    shift: int
    blocks: Dict[int, Matrix] = field(default_factory=dict)

    def __getitem__(self, n: int) -> Matrix:
        return self.blocks[n]

    def degrees(self) -> List[int]:
        return sorted(self.blocks)


def chain_map_violations(f: GradedMap, source: CochainComplex, target: CochainComplex) -> List[Dict[str, Any]]:
    """Degrees where delta_target f_n != f_{n+1} delta_source, with the first differing entry."""
    problems = []
    for n in f.degrees():
        if n + 1 not in f.blocks or n >= len(source.deltas) or n >= len(target.deltas):
            continue
        lhs = target.delta(n) @ f[n]
        rhs = f[n + 1] @ source.delta(n)
        if lhs != rhs:
            problems.append({"degree": n, "entry": list(lhs.first_difference(rhs))})
    return problems


def require_chain_map(f: GradedMap, source: CochainComplex, target: CochainComplex) -> None:
    problems = chain_map_violations(f, source, target)
    if problems:
        raise CheckFailure(f"{f.name} does not commute with the differentials", problems[0])


def enumerate_tuples(cover: Cover, max_degree: int, mode: str) -> List[List[Tuple[Tuple[int, ...], frozenset]]]:
    """
    Tuples of member indices with nonempty intersection, degree by degree.

    Full mode allows repeats; alternating mode keeps strictly increasing tuples.
    """
    if mode not in MODES:
        raise InputError(f"Unknown mode {mode!r}; expected 'full' or 'alternating'")
    m = len(cover)
    levels = [[((k,), cover.members[k]) for k in range(m) if cover.members[k]]]
    for _ in range(max_degree):
        nxt = []
        for u, meet in levels[-1]:
            start = 0 if mode == "full" else u[-1] + 1
            for k in range(start, m):
                inter = meet & cover.members[k]
                if inter:
                    nxt.append((u + (k,), inter))
        levels.append(nxt)
    return levels


def tuple_complex(cover: Cover, cache: SectionCache, levels, name: str, complete: bool = False) -> CochainComplex:
    """
    delta(c)(u) = sum over i of (-1)^i c(u without u_i) restricted to U_u.

    `levels` lists (tuple, support) pairs per degree; supports may be empty, giving
    zero summands.
    """
    f = cache.functor
    summands: List[List[Summand]] = []
    for level in levels:
        row, offset = [], 0
        for u, meet in level:
            d = cache.space(meet).dim
            row.append(Summand(u, tuple(cover.names[k] for k in u), d, offset))
            offset += d
        summands.append(row)

    deltas = []
    for n in range(len(levels) - 1):
        source_index = {s.key: s for s in summands[n]}
        source_support = dict(levels[n])
        builder = MatrixBuilder(sum(s.dim for s in summands[n + 1]), sum(s.dim for s in summands[n]), f.field)
        for (u, meet), target in zip(levels[n + 1], summands[n + 1]):
            if not target.dim:
                continue
            for i in range(len(u)):
                face = u[:i] + u[i + 1:]
                source = source_index.get(face)
                if source is None or not source.dim:
                    continue
                block = cache.restriction(source_support[face], meet)
                builder.add_block(target.offset, source.offset, block, -1 if i % 2 else 1)
        deltas.append(builder.build())
    return CochainComplex(f.field, summands, deltas, name=name, complete=complete)


def cech_complex(cover: Cover, functor: PosetFunctor, max_degree: int, mode: str = "alternating",
                 cache: Optional[SectionCache] = None) -> CochainComplex:
    """
    The Čech complex C(U; F) up to degree max_degree.

    Raises:
        InputError: If the cover topology does not match the functor's variance
    """
    if cover.tag != functor.topology:
        raise InputError(
            f"A {functor.variance} needs a {functor.topology} cover, got a {cover.tag} cover"
        )
    if max_degree < 1:
        raise InputError("max_degree must be at least 1")
    cache = cache or SectionCache(functor)
    levels = enumerate_tuples(cover, max_degree, mode)
    complete = mode == "alternating" and max_degree >= len(cover)
    complex_ = tuple_complex(cover, cache, levels, name=f"cech-{mode}", complete=complete)
    logger.info(f"Built {mode} Čech complex: cochain dims {complex_.dims()}")
    return complex_


def refinement_map(fine: Cover, coarse: Cover, projection: Sequence[int], functor: PosetFunctor,
                   fine_complex: CochainComplex, coarse_complex: CochainComplex,
                   cache: SectionCache) -> GradedMap:
    """
    lambda^* : C(coarse) -> C(fine) on full complexes, (lambda^* c)(u) = c(lambda u) restricted to U_u.
    """
    lam = GradedMap("refinement", 0)
    top = min(fine_complex.max_degree, coarse_complex.max_degree)
    for n in range(top + 1):
        builder = MatrixBuilder(fine_complex.dim(n), coarse_complex.dim(n), functor.field)
        for target in fine_complex.summands[n]:
            image = tuple(projection[k] for k in target.key)
            source = coarse_complex.summand(n, image)
            if source is None or not target.dim or not source.dim:
                continue
            block = cache.restriction(coarse.intersection(image), fine.intersection(target.key))
            builder.add_block(target.offset, source.offset, block)
        lam.blocks[n] = builder.build()
    return lam
