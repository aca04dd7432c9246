"""Tests for the Čech/nerve comparison, the subdivision homotopies and the prism homotopy."""

import random

import pytest

from src.cech import canonical_cover, maximal_cover, refining_pairs
from src.config.constants import CORPUS_MAX_POSET_SIZE, HOMOTOPY_MAX_DEGREE, RANDOM_PRESHEAF_PRIME
from src.corpus import cover_corpus, poset_corpus
from src.linalg import FieldSpec
from src.nerve import SubdivisionComparison, compare_cech_nerve, permutation_sign, projection_homotopy, verify_homotopy
from src.poset import structural_predicates
from src.presheaf import constant_presheaf, free_copresheaf, free_presheaf, random_injective_presheaf
from src.utils.errors import CheckFailure, InputError


@pytest.mark.parametrize("name", ["edge", "boundary"])
@pytest.mark.parametrize("mode", ["alternating", "full"])
def test_free_presheaf_comparison_is_an_isomorphism(named, rat, name, mode):
    report = compare_cech_nerve(free_presheaf(named[name], rat), 3, mode)
    assert report.isomorphic
    assert report.cech_dims == report.nerve_dims == report.induced_ranks


def test_comparison_needs_a_presheaf(named, rat):
    with pytest.raises(InputError):
        compare_cech_nerve(free_copresheaf(named["edge"], rat), 2)


def test_comparison_needs_conditional_products():
    rat = FieldSpec.rationals()
    for p in poset_corpus(seed=0, count=20, max_size=4):
        if structural_predicates(p).conditional_products:
            continue
        with pytest.raises(CheckFailure, match="conditional products"):
            compare_cech_nerve(constant_presheaf(p, rat), 2)


def test_permutation_sign():
    assert permutation_sign((0, 1, 2)) == 1
    assert permutation_sign((1, 0, 2)) == -1
    assert permutation_sign((2, 0, 1)) == 1


@pytest.mark.parametrize("cover_of", [canonical_cover, maximal_cover])
def test_homotopy_identities_on_the_boundary(named, rat, cover_of):
    v = free_presheaf(named["boundary"], rat)
    report = verify_homotopy(cover_of(v.poset, "upper"), v, 3)
    assert report.verified
    assert set(report.chain_maps) == {"pi_star", "subdivision"}
    assert [c.degree for c in report.checks] == [0, 1, 2]


def test_homotopy_on_random_presheaves(fp7):
    rng = random.Random(3)
    for p in poset_corpus(seed=3, count=6, max_size=4):
        v = random_injective_presheaf(p, rng, fp7)
        report = SubdivisionComparison(maximal_cover(p, "upper"), v, 2).verify(raise_on_failure=False)
        assert report.verified, p.elements


def test_homotopy_rejects_a_mismatched_cover(named, rat):
    v = free_presheaf(named["edge"], rat)
    with pytest.raises(InputError):
        SubdivisionComparison(canonical_cover(v.poset, "lower"), v)


def test_prism_between_canonical_and_maximal_covers(named, rat):
    v = free_presheaf(named["boundary"], rat)
    p = v.poset
    report = projection_homotopy(canonical_cover(p, "upper"), maximal_cover(p, "upper"), v, 2)
    assert report.verified
    assert report.identity_degrees == [0, 1]
    assert report.cocycles_to_coboundaries == [0, 1]
    assert len(report.lam) == len(report.mu) == len(p)


def test_prism_rejects_a_bad_projection(named, rat):
    v = free_presheaf(named["edge"], rat)
    p = v.poset
    with pytest.raises(InputError, match="lambda"):
        projection_homotopy(canonical_cover(p, "upper"), maximal_cover(p, "upper"), v, 2, lam=[0, 0, 0])


def test_refining_pairs_of_the_standard_covers(named):
    p = named["boundary"].poset()
    canonical, maximal = canonical_cover(p, "upper"), maximal_cover(p, "upper")
    pairs = refining_pairs([canonical, maximal])
    assert [(f.members, c.members) for f, c in pairs] == [
        (canonical.members, maximal.members),
        (maximal.members, canonical.members),
    ]


@pytest.mark.slow
def test_homotopy_and_prism_on_every_cover_of_the_poset_corpus():
    rng = random.Random(0)
    rat, field_ = FieldSpec.rationals(), FieldSpec.prime(RANDOM_PRESHEAF_PRIME)
    for p in poset_corpus(seed=0, max_size=CORPUS_MAX_POSET_SIZE):
        covers = cover_corpus(p, "upper", seed=0)
        for v in (constant_presheaf(p, rat), random_injective_presheaf(p, rng, field_)):
            for cover in covers:
                report = SubdivisionComparison(cover, v, HOMOTOPY_MAX_DEGREE).verify(raise_on_failure=False)
                assert report.verified, (p.elements, cover.names)
                assert [c.degree for c in report.checks] == [0, 1, 2, 3]
            for fine, coarse in refining_pairs(covers):
                prism = projection_homotopy(fine, coarse, v, HOMOTOPY_MAX_DEGREE, raise_on_failure=False)
                assert prism.verified, (p.elements, fine.names, coarse.names)
