"""Tests for nerve chains and the intersection poset of a cover."""

import pytest

from src.cech import canonical_cover, maximal_cover
from src.config.constants import INTERSECTION_MAX_MEMBERS
from src.nerve import (
    degeneracy,
    enumerate_chains,
    face,
    intersection_poset,
    is_chain,
    projection,
    simplicial_identity_violations,
)
from src.poset import Poset
from src.utils.errors import InputError


def below(a, b):
    return a <= b


def test_face_and_degeneracy():
    assert face((0, 1, 2), 1) == (0, 2)
    assert degeneracy((0, 1), 0) == (0, 0, 1)
    assert is_chain((0, 0, 2), below)
    assert not is_chain((0, 0, 2), below, strict=True)
    assert not is_chain((2, 1), below)


def test_chain_counts_on_a_three_element_chain():
    strict = enumerate_chains(3, below, 2, "nondegenerate")
    assert [len(level) for level in strict] == [3, 3, 1]
    full = enumerate_chains(3, below, 2, "full")
    assert [len(level) for level in full] == [3, 6, 10]


def test_unknown_mode():
    with pytest.raises(InputError, match="nerve mode"):
        enumerate_chains(2, below, 1, "alternating")


def test_simplicial_identities_hold():
    chains = [c for level in enumerate_chains(3, below, 3, "full") for c in level]
    assert simplicial_identity_violations(chains) == []


def test_intersection_poset_of_the_boundary(named):
    cover = maximal_cover(named["boundary"].poset(), "upper")
    ip = intersection_poset(cover)
    assert len(ip) == 6
    assert ip.generators[3:] == [(0, 1), (0, 2), (1, 2)]
    assert ip.contains(0, 3) and not ip.contains(3, 0)
    assert projection(ip) == [0, 1, 2, 0, 0, 1]


def test_intersection_poset_refuses_a_large_cover():
    antichain = Poset.from_generators([f"x{k}" for k in range(INTERSECTION_MAX_MEMBERS + 1)], [])
    with pytest.raises(InputError, match="at most"):
        intersection_poset(canonical_cover(antichain, "upper"))
