"""Sections of a (co)presheaf over open sets of a finite Alexandrov space."""

from typing import Dict, FrozenSet, Iterable, List, Tuple

from ..linalg import Matrix, Subspace
from ..presheaf import PosetFunctor
from ..utils.errors import InputError
from ..utils.logging import get_logger
from .opens import OpenSet, is_open

logger = get_logger(__name__)


class SectionSpace:
    """
    Coherent families (s_a) over an open set W, as a subspace of the direct sum of the
    stalks over W in element order.
    """

    def __init__(self, functor: PosetFunctor, support: FrozenSet[int], subspace: Subspace):
        self.functor = functor
        self.support: Tuple[int, ...] = tuple(sorted(support))
        self.offsets: Dict[int, int] = {}
        offset = 0
        for i in self.support:
            self.offsets[i] = offset
            offset += functor.dims[i]
        self.subspace = subspace

    @property
    def dim(self) -> int:
        return self.subspace.dim

    def __repr__(self) -> str:
        return f"SectionSpace(dim={self.dim}, support={len(self.support)} points)"

    def evaluation(self, point: int) -> Matrix:
        """The map s -> s_point, a dims[point] x dim matrix."""
        start, size = self.offsets[point], self.functor.dims[point]
        columns = [
            {k - start: v for k, v in vector.items() if start <= k < start + size}
            for vector in self.subspace.vectors
        ]
        return Matrix.from_columns(columns, size, self.functor.field)

    def restriction_to(self, other: "SectionSpace") -> Matrix:
        """Restriction to a smaller open, written in both canonical bases."""
        if not set(other.support) <= set(self.support):
            raise InputError("Restriction target is not contained in the source open")
        f = self.functor
        columns = []
        for vector in self.subspace.vectors:
            projected = {}
            for i in other.support:
                src, dst = self.offsets[i], other.offsets[i]
                for d in range(f.dims[i]):
                    v = vector.get(src + d)
                    if v:
                        projected[dst + d] = v
            coeffs = other.subspace.coordinates(projected)
            if coeffs is None:
                raise InputError("Restricted family is not a section of the smaller open")
            columns.append({k: c for k, c in enumerate(coeffs) if c})
        return Matrix.from_columns(columns, other.dim, f.field)


class SectionCache:
    """Section spaces and restriction matrices of one functor, shared by support."""

    def __init__(self, functor: PosetFunctor):
        self.functor = functor
        self._spaces: Dict[FrozenSet[int], SectionSpace] = {}
        self._restrictions: Dict[Tuple[FrozenSet[int], FrozenSet[int]], Matrix] = {}

    def __len__(self) -> int:
        return len(self._spaces)

    def space(self, support: Iterable[int]) -> SectionSpace:
        support = frozenset(support)
        if support not in self._spaces:
            self._spaces[support] = _compute_sections(self.functor, support)
        return self._spaces[support]

    def restriction(self, source: Iterable[int], target: Iterable[int]) -> Matrix:
        key = (frozenset(source), frozenset(target))
        if key not in self._restrictions:
            src, dst = self.space(key[0]), self.space(key[1])
            if key[0] == key[1]:
                self._restrictions[key] = Matrix.identity(src.dim, self.functor.field)
            else:
                self._restrictions[key] = src.restriction_to(dst)
        return self._restrictions[key]


def _compute_sections(functor: PosetFunctor, support: FrozenSet[int]) -> SectionSpace:
    f = functor
    points = sorted(support)
    offsets, total = {}, 0
    for i in points:
        offsets[i] = total
        total += f.dims[i]

    # An open generated by one point: sections are the stalk there, spread by restriction.
    generator = next((i for i in points if f.basis_open(i) == support), None)
    if generator is not None:
        columns = []
        for d in range(f.dims[generator]):
            column = {}
            for q in points:
                block = f.restriction(generator, q).column(d)
                for k, v in block.items():
                    column[offsets[q] + k] = v
            columns.append(column)
        return SectionSpace(f, support, Subspace.span(columns, total, f.field))

    # Otherwise the kernel of the compatibility defects along covering arrows inside W.
    rows: List[Dict[int, object]] = []
    minus_one = f.field.coerce(-1)
    for p in points:
        for q in points:
            if q == p or q not in f.basis_open(p) or not _is_cover(f, p, q):
                continue
            res = f.restriction(p, q)
            for r in range(f.dims[q]):
                row = {offsets[q] + r: f.field.one}
                for c, v in res.row(r).items():
                    row[offsets[p] + c] = f.field.mul(minus_one, v)
                rows.append(row)
    constraints = Matrix.from_row_vectors(rows, total, f.field)
    return SectionSpace(f, support, Subspace.span(constraints.kernel_vectors(), total, f.field))


def _is_cover(f: PosetFunctor, p: int, q: int) -> bool:
    pair = (p, q) if f.topology == "lower" else (q, p)
    return pair in f.poset.covering_set


def sections(functor: PosetFunctor, w: OpenSet) -> SectionSpace:
    """
    Global sections over an open set.

    Raises:
        InputError: If the open's topology does not match the functor's variance or the
            set is not open
    """
    if w.tag != functor.topology:
        raise InputError(
            f"A {functor.variance} lives on {functor.topology} opens, got a {w.tag} open"
        )
    if not is_open(functor.poset, w.points, w.tag):
        raise InputError(f"{w.labels(functor.poset)} is not {w.tag}-open")
    return _compute_sections(functor, frozenset(w.points))
