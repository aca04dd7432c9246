"""Tests for posets and hypergraphs."""

import pytest

from src.poset import Hypergraph, Poset, check_intersection_property, face_label
from src.utils.errors import InputError


def test_from_generators_closes_transitively():
    p = Poset.from_generators(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert p.arrow("a", "c")
    assert not p.arrow("c", "a")
    assert p.down_set("a") == frozenset({"a", "b", "c"})
    assert p.up_set("c") == frozenset({"a", "b", "c"})
    assert p.check_invariants() == []


def test_two_cycle_is_rejected():
    with pytest.raises(InputError, match="Antisymmetry"):
        Poset.from_generators(["a", "b"], [("a", "b"), ("b", "a")])


def test_unknown_element_in_arrow():
    with pytest.raises(InputError):
        Poset.from_generators(["a"], [("a", "z")])


def test_covering_pairs_and_dimension():
    p = Poset.from_generators(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])
    assert p.covering_pairs == ((0, 1), (1, 2))
    assert p.dimensions == (2, 1, 0)
    assert p.dimension == 2


def test_subposet_and_opposite():
    p = Poset.from_generators(["a", "b", "c"], [("a", "b"), ("b", "c")])
    sub = p.subposet(["a", "c"])
    assert sub.elements == ("a", "c")
    assert sub.arrow("a", "c")
    assert p.opposite().arrow("c", "a")


def test_face_poset_orders_by_inclusion(named):
    p = named["edge"].poset()
    assert p.elements == ("{1}", "{2}", "{1,2}")
    assert p.arrow("{1,2}", "{1}")
    assert not p.arrow("{1}", "{1,2}")


def test_face_label():
    assert face_label(("1", "2")) == "{1,2}"
    assert face_label(()) == "{}"


def test_hypergraph_canonicalizes_faces():
    h = Hypergraph.create(["1", "2"], [["2", "1"]], default_cardinality=3)
    assert h.faces == (("1", "2"),)
    assert h.n_configurations(h.faces[0]) == 9


@pytest.mark.parametrize("faces, cards", [
    ([["1"], ["1"]], {"1": 2}),
    ([["1", "9"]], {"1": 2}),
    ([["1", "1"]], {"1": 2}),
    ([["1"]], {}),
    ([["1"]], {"1": 0}),
])
def test_hypergraph_rejects(faces, cards):
    with pytest.raises(InputError):
        Hypergraph.create(["1"], faces, cards)


def test_configurations_are_lexicographic():
    h = Hypergraph.create(["1", "2"], [["1", "2"]], {"1": 2, "2": 3})
    configs = h.configurations(("1", "2"))
    assert configs[0] == (0, 0)
    assert configs[1] == (0, 1)
    assert len(configs) == 6
    assert h.configuration_index((1, 2), ("1", "2")) == 5


def test_intersection_properties(named):
    assert check_intersection_property(named["boundary_with_empty"]).strong
    report = check_intersection_property(named["boundary"])
    assert report.weak and not report.strong
    assert report.strong_witness is not None


def test_weak_intersection_failure():
    h = Hypergraph.create(["1", "2", "3"], [["1", "2"], ["2", "3"]], default_cardinality=2)
    report = check_intersection_property(h)
    assert not report.weak
    assert report.weak_witness == ("{1,2}", "{2,3}")


def test_powerset_and_boundary_sizes():
    assert len(Hypergraph.powerset(3).faces) == 8
    assert len(Hypergraph.powerset(3, include_empty=False).faces) == 7
    assert len(Hypergraph.boundary(3).faces) == 6
    assert Hypergraph.boundary(3).is_downward_closed()
