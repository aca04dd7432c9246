"""The poset of nonempty intersections of a cover and its projection back to the cover."""

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

from ..cech import Cover, SectionCache
from ..config.constants import INTERSECTION_MAX_MEMBERS
from ..poset import Poset
from ..utils.errors import InputError
from .complex import LocalSystem

INTERSECTION = "&"


@dataclass
class IntersectionPoset:
    """
    Distinct nonempty intersections of cover members, ordered by inclusion.

    Cover members come first in cover order, then new intersections by generating set
    size and lexicographic order. arrow(V, W) holds when W is contained in V.
    """

    cover: Cover
    cells: List[FrozenSet[int]]
    generators: List[Tuple[int, ...]]
    poset: Poset

    def __len__(self) -> int:
        return len(self.cells)

    def contains(self, a: int, b: int) -> bool:
        return self.cells[b] <= self.cells[a]

    def cell_index(self, support: FrozenSet[int]) -> int:
        return self._positions[support]

    def __post_init__(self):
        self._positions: Dict[FrozenSet[int], int] = {c: k for k, c in enumerate(self.cells)}

    def local_system(self, cache: SectionCache) -> LocalSystem:
        """Sections of the cover's functor over each intersection."""
        cells = self.cells
        return LocalSystem(
            labels=self.poset.elements,
            contains=self.contains,
            dim=lambda a: cache.space(cells[a]).dim,
            restriction=lambda a, b: cache.restriction(cells[a], cells[b]),
            field=cache.functor.field,
        )

    def to_json(self) -> dict:
        elements = self.poset.elements
        return {
            "cells": {
                elements[k]: [self.cover.poset.elements[i] for i in sorted(cell)]
                for k, cell in enumerate(self.cells)
            },
            "poset": self.poset.to_json(),
        }


def intersection_poset(cover: Cover) -> IntersectionPoset:
    """
    Enumerates every subcollection of the cover, so the cover may have at most
    INTERSECTION_MAX_MEMBERS members.

    Raises:
        InputError: On a larger cover
    """
    if len(cover) > INTERSECTION_MAX_MEMBERS:
        raise InputError(
            f"Cover has {len(cover)} members; intersection posets allow at most {INTERSECTION_MAX_MEMBERS}"
        )
    cells: List[FrozenSet[int]] = []
    generators: List[Tuple[int, ...]] = []
    seen = set()
    for size in range(1, len(cover) + 1):
        for combo in itertools.combinations(range(len(cover)), size):
            meet = cover.intersection(combo)
            if meet and meet not in seen:
                seen.add(meet)
                cells.append(meet)
                generators.append(combo)
    labels = [INTERSECTION.join(cover.names[k] for k in g) for g in generators]
    down = [[j for j, other in enumerate(cells) if other <= cell] for cell in cells]
    return IntersectionPoset(cover, cells, generators, Poset(labels, down))


def projection(ip: IntersectionPoset) -> List[int]:
    """
    pi(V) for every cell: V itself when V is a cover member, else the first member
    containing V. Returns member indices.
    """
    members = {m: k for k, m in enumerate(ip.cover.members)}
    result = []
    for cell in ip.cells:
        if cell in members:
            result.append(members[cell])
        else:
            result.append(next(k for k, m in enumerate(ip.cover.members) if cell <= m))
    return result
