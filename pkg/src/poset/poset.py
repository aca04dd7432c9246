"""Finite posets viewed as categories with at most one arrow per ordered pair."""

from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from ..utils.errors import InputError
from ..utils.logging import get_logger

logger = get_logger(__name__)


class Poset:
    """
    A finite poset with the arrow convention arrow(a, b) <=> b <= a.

    The lower Alexandrov basis open of a is U_a = down_set(a) = {b : a -> b}; the upper
    one is U^b = up_set(b) = {a : a -> b}. Element order is the declared input order and
    breaks every tie downstream.
    """

    def __init__(self, elements: Sequence[str], down: Sequence[Iterable[int]]):
        self.elements: Tuple[str, ...] = tuple(elements)
        self._index: Dict[str, int] = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            seen = set()
            duplicate = next(e for e in self.elements if e in seen or seen.add(e))
            raise InputError(f"Duplicate element: {duplicate}")
        self._down: Tuple[FrozenSet[int], ...] = tuple(frozenset(d) | {i} for i, d in enumerate(down))
        up: List[set] = [set() for _ in self.elements]
        for i, targets in enumerate(self._down):
            for j in targets:
                up[j].add(i)
        self._up: Tuple[FrozenSet[int], ...] = tuple(frozenset(u) for u in up)

    @classmethod
    def from_generators(cls, elements: Sequence[str], arrows: Iterable[Tuple[str, str]]) -> "Poset":
        """
        Reflexive-transitive closure of generating arrows.

        Raises:
            InputError: On unknown elements or when the closure has a 2-cycle
        """
        index = {e: i for i, e in enumerate(elements)}
        successors: List[set] = [set() for _ in elements]
        for a, b in arrows:
            if a not in index or b not in index:
                raise InputError(f"Arrow ({a}, {b}) names an undeclared element")
            successors[index[a]].add(index[b])

        closure: List[set] = []
        for start in range(len(elements)):
            reached = {start}
            stack = [start]
            while stack:
                node = stack.pop()
                for nxt in successors[node]:
                    if nxt not in reached:
                        reached.add(nxt)
                        stack.append(nxt)
            closure.append(reached)

        for i in range(len(elements)):
            for j in closure[i]:
                if j != i and i in closure[j]:
                    raise InputError(
                        f"Antisymmetry violated: 2-cycle between {elements[i]} and {elements[j]}"
                    )
        poset = cls(elements, closure)
        logger.debug(f"Built poset with {len(poset)} elements from generators")
        return poset

    # Basic access

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, element) -> bool:
        return element in self._index

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and self._down == other._down

    __hash__ = None

    def __repr__(self) -> str:
        return f"Poset({len(self)} elements)"

    def index(self, element: str) -> int:
        try:
            return self._index[element]
        except KeyError:
            raise InputError(f"Unknown element: {element}")

    def arrow(self, a: str, b: str) -> bool:
        return self.index(b) in self._down[self.index(a)]

    def arrow_idx(self, i: int, j: int) -> bool:
        return j in self._down[i]

    def down_indices(self, i: int) -> FrozenSet[int]:
        return self._down[i]

    def up_indices(self, i: int) -> FrozenSet[int]:
        return self._up[i]

    def down_set(self, a: str) -> FrozenSet[str]:
        """U_a = {b : a -> b}."""
        return frozenset(self.elements[j] for j in self._down[self.index(a)])

    def up_set(self, b: str) -> FrozenSet[str]:
        """U^b = {a : a -> b}."""
        return frozenset(self.elements[i] for i in self._up[self.index(b)])

    def strict_targets(self, i: int) -> List[int]:
        return sorted(self._down[i] - {i})

    def arrows(self, strict: bool = False) -> List[Tuple[str, str]]:
        out = []
        for i, targets in enumerate(self._down):
            for j in sorted(targets):
                if not strict or i != j:
                    out.append((self.elements[i], self.elements[j]))
        return out

    @cached_property
    def covering_pairs(self) -> Tuple[Tuple[int, int], ...]:
        """Strict arrows i -> j with no element strictly in between."""
        pairs = []
        for i, targets in enumerate(self._down):
            strict = targets - {i}
            for j in sorted(strict):
                if not any(j in self._down[k] for k in strict if k != j):
                    pairs.append((i, j))
        return tuple(pairs)

    @cached_property
    def covering_set(self) -> FrozenSet[Tuple[int, int]]:
        return frozenset(self.covering_pairs)

    @cached_property
    def dimensions(self) -> Tuple[int, ...]:
        """Maximal length of a strict chain a -> b_1 -> ... -> b_k, per element."""
        dims: Dict[int, int] = {}

        def visit(i: int) -> int:
            if i not in dims:
                dims[i] = max((1 + visit(j) for j in self._down[i] if j != i), default=0)
            return dims[i]

        return tuple(visit(i) for i in range(len(self)))

    def dimension_of(self, a: str) -> int:
        return self.dimensions[self.index(a)]

    @property
    def dimension(self) -> int:
        return max(self.dimensions, default=0)

    def order_by_dimension(self) -> List[int]:
        """Indices sorted by increasing dimension, ties by element order."""
        return sorted(range(len(self)), key=lambda i: (self.dimensions[i], i))

    def opposite(self) -> "Poset":
        return Poset(self.elements, self._up)

    def subposet(self, elements: Iterable[str]) -> "Poset":
        """Induced subposet, keeping this poset's element order."""
        keep = set(elements)
        for e in keep:
            self.index(e)
        chosen = [i for i, e in enumerate(self.elements) if e in keep]
        position = {i: k for k, i in enumerate(chosen)}
        down = [[position[j] for j in self._down[i] if j in position] for i in chosen]
        return Poset([self.elements[i] for i in chosen], down)

    def check_invariants(self) -> List[str]:
        """Exhaustive reflexivity, antisymmetry and transitivity check; returns violations."""
        problems = []
        n = len(self)
        for i in range(n):
            if i not in self._down[i]:
                problems.append(f"not reflexive at {self.elements[i]}")
            for j in self._down[i]:
                if j != i and i in self._down[j]:
                    problems.append(f"2-cycle {self.elements[i]} <-> {self.elements[j]}")
                for k in self._down[j]:
                    if k not in self._down[i]:
                        problems.append(
                            f"not transitive: {self.elements[i]}->{self.elements[j]}->{self.elements[k]}"
                        )
        return problems

    def to_json(self) -> dict:
        return {
            "elements": list(self.elements),
            "arrows": [[self.elements[i], self.elements[j]] for i, j in self.covering_pairs],
        }


def poset_from_generators(elements: Sequence[str], arrows: Iterable[Tuple[str, str]]) -> Poset:
    return Poset.from_generators(elements, arrows)


def down_set(p: Poset, a: str) -> FrozenSet[str]:
    return p.down_set(a)


def up_set(p: Poset, b: str) -> FrozenSet[str]:
    return p.up_set(b)
