"""Möbius functions and Euler characteristics of finite posets."""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .hypergraph import Hypergraph
from .poset import Poset
from ..utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class MobiusTable:
    """mu(a, b) on ordered pairs; zero unless arrow(a, b)."""

    poset: Poset
    values: Dict[Tuple[int, int], int]

    def mu(self, a: str, b: str) -> int:
        return self.values.get((self.poset.index(a), self.poset.index(b)), 0)

    def mu_idx(self, i: int, j: int) -> int:
        return self.values.get((i, j), 0)

    def total(self) -> int:
        return sum(self.values.values())

    def row_sum_violations(self) -> List[Tuple[str, str, int]]:
        """Pairs a -> c where sum of mu(a, b) over a -> b -> c differs from [a = c]."""
        p = self.poset
        bad = []
        for i in range(len(p)):
            for k in p.down_indices(i):
                s = sum(self.values.get((i, j), 0) for j in p.down_indices(i) if k in p.down_indices(j))
                if s != (1 if i == k else 0):
                    bad.append((p.elements[i], p.elements[k], s))
        return bad

    def to_json(self) -> dict:
        p = self.poset
        return {
            "elements": list(p.elements),
            "mu": [[p.elements[i], p.elements[j], v] for (i, j), v in sorted(self.values.items())],
        }


def mobius(p: Poset) -> MobiusTable:
    """
    mu(a, a) = 1 and mu(a, c) = -sum of mu(a, b) over a -> b -> c with b != c.

    Targets of a are visited by decreasing dimension so every b between a and c is
    settled before c.
    """
    values: Dict[Tuple[int, int], int] = {}
    dims = p.dimensions
    for i in range(len(p)):
        below = sorted(p.down_indices(i), key=lambda j: (-dims[j], j))
        row: Dict[int, int] = {}
        for k in below:
            if k == i:
                row[k] = 1
                continue
            row[k] = -sum(row[j] for j in row if j != k and k in p.down_indices(j))
        for k, v in row.items():
            if v:
                values[(i, k)] = v
    logger.debug(f"Computed Möbius table with {len(values)} nonzero entries")
    return MobiusTable(p, values)


def euler_char_mobius(p: Poset) -> int:
    """chi = sum of mu over all pairs."""
    return mobius(p).total()


def chain_counts(p: Poset) -> List[int]:
    """r_k = number of strict chains a_0 -> ... -> a_k."""
    starting = [1] * len(p)
    counts = [len(p)] if len(p) else []
    while any(starting):
        starting = [sum(starting[j] for j in p.strict_targets(i)) for i in range(len(p))]
        total = sum(starting)
        if not total:
            break
        counts.append(total)
    return counts


def euler_char_hall(p: Poset) -> int:
    """r_0 - r_1 + r_2 - ..."""
    return sum((-1) ** k * r for k, r in enumerate(chain_counts(p)))


def euler_char_bounded(p: Poset) -> int:
    """
    Adjoin a top (mapping to everything) and a bottom (receiving from everything)
    and return mu(top, bottom) + mu(bottom, bottom).
    """
    top, bottom = "top", "bottom"
    while top in p or bottom in p:
        top, bottom = top + "'", bottom + "'"
    n = len(p)
    down = [set(p.down_indices(i)) | {n + 1} for i in range(n)]
    down.append(set(range(n + 2)))
    down.append({n + 1})
    extended = Poset(list(p.elements) + [top, bottom], down)
    table = mobius(extended)
    return table.mu(top, bottom) + table.mu(bottom, bottom)


def face_count_euler(h: Hypergraph) -> int:
    """a_0 - a_1 + ... over nonempty faces, a_k counting faces with k + 1 vertices."""
    return sum((-1) ** (len(f) - 1) for f in h.faces if f)
