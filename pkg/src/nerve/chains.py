"""Chains of a nerve with their face and degeneracy operators."""

from typing import Callable, Dict, List, Sequence, Tuple

from ..utils.errors import InputError

Chain = Tuple[int, ...]
Contains = Callable[[int, int], bool]

CHAIN_MODES = ("full", "nondegenerate")


def face(chain: Chain, i: int) -> Chain:
    """d_i: drop the i-th cell."""
    return chain[:i] + chain[i + 1:]


def degeneracy(chain: Chain, i: int) -> Chain:
    """s_i: repeat the i-th cell."""
    return chain[:i + 1] + chain[i:]


def is_chain(chain: Chain, contains: Contains, strict: bool = False) -> bool:
    for a, b in zip(chain, chain[1:]):
        if not contains(a, b) or (strict and a == b):
            return False
    return bool(chain)


def enumerate_chains(n_cells: int, contains: Contains, max_degree: int, mode: str) -> List[List[Chain]]:
    """
    Chains c_0, ..., c_n with contains(c_k, c_{k+1}), per degree n = 0..max_degree.

    Full mode allows repeated cells; nondegenerate mode requires every step to be strict.
    Chains are listed in lexicographic order.
    """
    if mode not in CHAIN_MODES:
        raise InputError(f"Unknown nerve mode {mode!r}; expected 'full' or 'nondegenerate'")
    strict = mode == "nondegenerate"
    successors: Dict[int, List[int]] = {
        a: [b for b in range(n_cells) if contains(a, b) and not (strict and a == b)]
        for a in range(n_cells)
    }
    levels = [[(a,) for a in range(n_cells)]]
    for _ in range(max_degree):
        levels.append([c + (b,) for c in levels[-1] for b in successors[c[-1]]])
    return levels


def simplicial_identity_violations(chains: Sequence[Chain]) -> List[str]:
    """
    Check the face/degeneracy relations on the given chains:
    d_i d_j = d_{j-1} d_i (i < j), s_i s_j = s_{j+1} s_i (i <= j),
    d_i s_j = s_{j-1} d_i (i < j), d_j s_j = d_{j+1} s_j = id, d_i s_j = s_j d_{i-1} (i > j + 1).
    """
    problems = []
    for c in chains:
        n = len(c) - 1
        for j in range(n + 1):
            for i in range(j):
                if face(face(c, j), i) != face(face(c, i), j - 1):
                    problems.append(f"d{i}d{j} on {c}")
            for i in range(j + 1):
                if degeneracy(degeneracy(c, j), i) != degeneracy(degeneracy(c, i), j + 1):
                    problems.append(f"s{i}s{j} on {c}")
            s = degeneracy(c, j)
            if face(s, j) != c or face(s, j + 1) != c:
                problems.append(f"d s{j} on {c}")
            for i in range(j):
                if face(s, i) != degeneracy(face(c, i), j - 1):
                    problems.append(f"d{i}s{j} on {c}")
            for i in range(j + 2, n + 2):
                if face(s, i) != degeneracy(face(c, i - 1), j):
                    problems.append(f"d{i}s{j} on {c}")
    return problems
