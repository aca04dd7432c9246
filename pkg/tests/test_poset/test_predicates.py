"""Tests for structural predicates, components and final elements."""

from src.poset import (
    Hypergraph,
    Poset,
    components_and_finals,
    coproduct,
    maximal_elements,
    minimal_elements,
    product,
    structural_predicates,
)


def test_edge_has_products_and_coproducts(named):
    p = named["edge"].poset()
    report = structural_predicates(p)
    assert report.conditional_coproducts
    assert report.conditional_products
    assert product(p, "{1}", "{2}") == "{1,2}"
    assert coproduct(p, "{1,2}", "{1}") == "{1}"
    assert report.dimension_of == {"{1}": 0, "{2}": 0, "{1,2}": 1}


def test_missing_coproduct_has_a_witness():
    h = Hypergraph.create(["1", "2", "3", "4"], [["1"], ["2"], ["1", "2", "3"], ["1", "2", "4"]],
                          default_cardinality=2)
    report = structural_predicates(h.poset())
    assert not report.conditional_coproducts
    assert report.coproduct_witness == ("{1,2,3}", "{1,2,4}")


def test_covering_sets(named):
    p = named["edge"].poset()
    assert maximal_elements(p) == ["{1,2}"]
    assert minimal_elements(p) == ["{1}", "{2}"]
    report = structural_predicates(p)
    assert report.lower_covering_set == ["{1,2}"]
    assert report.upper_covering_set == ["{1}", "{2}"]


def test_components_and_finals(named):
    report = components_and_finals(named["two_points"].poset())
    assert report.components == [["{1}"], ["{2}"]]
    assert report.final_elements == ["{1}", "{2}"]

    report = components_and_finals(named["edge"].poset())
    assert report.finals == [None]

    report = components_and_finals(named["boundary_with_empty"].poset())
    assert report.final_elements == ["{}"]


def test_chain_has_a_final_element():
    p = Poset.from_generators(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert components_and_finals(p).finals == ["c"]
