"""Open sets and open covers of a finite Alexandrov space."""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..poset import Poset
from ..poset.predicates import maximal_elements, minimal_elements
from ..utils.errors import InputError
from ..utils.logging import get_logger

logger = get_logger(__name__)

TOPOLOGIES = ("lower", "upper")


def _check_tag(tag: str) -> None:
    if tag not in TOPOLOGIES:
        raise InputError(f"Unknown topology {tag!r}; expected 'lower' or 'upper'")


def basis_open(p: Poset, i: int, tag: str) -> FrozenSet[int]:
    """U_a (lower) or U^a (upper) as element indices."""
    return p.down_indices(i) if tag == "lower" else p.up_indices(i)


def is_open(p: Poset, points: Iterable[int], tag: str) -> bool:
    """A set is open iff it contains the basis open of each of its points."""
    _check_tag(tag)
    points = frozenset(points)
    return all(basis_open(p, i, tag) <= points for i in points)


@dataclass(frozen=True)
class OpenSet:
    points: FrozenSet[int]
    tag: str

    def labels(self, p: Poset) -> List[str]:
        return [p.elements[i] for i in sorted(self.points)]


@dataclass(frozen=True)
class Cover:
    """An ordered family of distinct open sets whose union is the whole space."""

    poset: Poset
    tag: str
    members: Tuple[FrozenSet[int], ...]
    names: Tuple[str, ...]

    def __post_init__(self):
        _check_tag(self.tag)
        if len(self.members) != len(self.names):
            raise InputError("Cover members and names differ in length")
        for name, member in zip(self.names, self.members):
            if not is_open(self.poset, member, self.tag):
                raise InputError(f"Cover member {name} is not {self.tag}-open")
        if len(set(self.members)) != len(self.members):
            raise InputError("Cover members must be distinct")
        covered = frozenset().union(*self.members) if self.members else frozenset()
        if covered != frozenset(range(len(self.poset))):
            missing = sorted(set(range(len(self.poset))) - covered)
            raise InputError(f"Cover misses {[self.poset.elements[i] for i in missing]}")

    def __len__(self) -> int:
        return len(self.members)

    def intersection(self, indices: Sequence[int]) -> FrozenSet[int]:
        result = self.members[indices[0]]
        for k in indices[1:]:
            result = result & self.members[k]
        return result

    def member_labels(self, k: int) -> List[str]:
        return [self.poset.elements[i] for i in sorted(self.members[k])]

    def to_json(self) -> dict:
        return {
            "topology": self.tag,
            "members": {name: self.member_labels(k) for k, name in enumerate(self.names)},
        }


def make_cover(p: Poset, tag: str, members: Sequence[Iterable[str]], names: Optional[Sequence[str]] = None) -> Cover:
    """Cover from element labels; members are named U0, U1, ... unless names are given."""
    sets = tuple(frozenset(p.index(e) for e in member) for member in members)
    return Cover(p, tag, sets, tuple(names) if names else tuple(f"U{k}" for k in range(len(sets))))


def canonical_cover(p: Poset, tag: str) -> Cover:
    """The basis opens of every element in element order; it refines every open cover."""
    _check_tag(tag)
    return Cover(p, tag, tuple(basis_open(p, i, tag) for i in range(len(p))), p.elements)


def maximal_cover(p: Poset, tag: str) -> Cover:
    """
    Basis opens of the maximal elements (lower) or minimal elements (upper).

    With conditional coproducts (lower) or products (upper) every nonempty intersection
    of its members is again a basis open.
    """
    _check_tag(tag)
    chosen = maximal_elements(p) if tag == "lower" else minimal_elements(p)
    return Cover(p, tag, tuple(basis_open(p, p.index(e), tag) for e in chosen), tuple(chosen))


def is_refinement(fine: Cover, coarse: Cover) -> bool:
    """Every member of `fine` lies in some member of `coarse`."""
    return all(any(m <= c for c in coarse.members) for m in fine.members)


def refining_pairs(covers: Sequence[Cover]) -> List[Tuple[Cover, Cover]]:
    """Ordered pairs (fine, coarse) of distinct covers where the first refines the second."""
    return [(f, c) for f in covers for c in covers if f.members != c.members and is_refinement(f, c)]


def projection_map(fine: Cover, coarse: Cover, rule: str = "first") -> List[int]:
    """
    For each member of `fine` the first (or last) member of `coarse` containing it.

    Raises:
        InputError: If `fine` does not refine `coarse` or the rule is unknown
    """
    if rule not in ("first", "last"):
        raise InputError(f"Unknown projection rule {rule!r}")
    result = []
    for k, member in enumerate(fine.members):
        candidates = [c for c, target in enumerate(coarse.members) if member <= target]
        if not candidates:
            raise InputError(f"Member {fine.names[k]} lies in no member of the coarse cover")
        result.append(candidates[0] if rule == "first" else candidates[-1])
    return result


def leray_cover(p: Poset, tag: str) -> Cover:
    """
    The maximal cover when its intersections are basis opens (conditional coproducts for
    lower, products for upper), else the canonical cover.
    """
    from ..poset import structural_predicates

    report = structural_predicates(p)
    closed = report.conditional_coproducts if tag == "lower" else report.conditional_products
    return maximal_cover(p, tag) if closed else canonical_cover(p, tag)
