"""Invariant suites run by --self-test on the built-in corpus."""

import random
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List

from .cech import canonical_cover, cech_complex, leray_cover, refining_pairs
from .config.constants import CORPUS_MAX_POSET_SIZE, HOMOTOPY_MAX_DEGREE, RANDOM_PRESHEAF_PRIME
from .corpus import (
    cover_corpus,
    hypergraph_corpus,
    inclusion_corpus,
    named_hypergraphs,
    poset_corpus,
    presheaf_corpus,
)
from .linalg import FieldSpec, Matrix, Subspace
from .linalg.field import FAST_MODE_PRIME
from .marginal import (
    boundary_h0,
    brute_force_h0,
    cohomology_profile,
    constant_split,
    euler_char_sheaf,
    index_formula,
    marginal_surjectivity,
    pseudomarginal_dim,
    simplex_h0,
)
from .nerve import (
    SubdivisionComparison,
    compare_cech_nerve,
    enumerate_chains,
    intersection_poset,
    projection_homotopy,
    simplicial_identity_violations,
)
from .poset import (
    Hypergraph,
    check_intersection_property,
    euler_char_bounded,
    euler_char_hall,
    euler_char_mobius,
    mobius,
    structural_predicates,
)
from .presheaf import (
    check_condition_g,
    constant_presheaf,
    free_copresheaf,
    free_presheaf,
    interaction_decomposition,
    reduced_presheaf,
    random_injective_presheaf,
    restricted_copresheaf,
)
from .utils.errors import CheckFailure, InputError
from .utils.logging import get_logger

logger = get_logger(__name__)

MODULES = ("linalg", "poset", "presheaf", "cech", "nerve", "marginal")


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)

    def check(self, ok: bool, **witness) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(witness)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"checked": self.checked, "passed": self.passed, "failures": self.failures[:10]}


def _random_matrix(rng: random.Random, rows: int, cols: int, field_: FieldSpec) -> Matrix:
    return Matrix.from_rows([[rng.randint(-2, 2) for _ in range(cols)] for _ in range(rows)], field_, cols=cols)


def linalg_suite(seed: int) -> SuiteResult:
    result = SuiteResult("linalg")
    rng = random.Random(seed)
    rat, fast = FieldSpec.rationals(), FieldSpec.prime(FAST_MODE_PRIME)
    for _ in range(100):
        rows = [[rng.randint(-2, 2) for _ in range(6)] for _ in range(rng.randint(1, 6))]
        result.check(Matrix.from_rows(rows, rat, cols=6).rank() == Matrix.from_rows(rows, fast, cols=6).rank(),
                     rows=rows, check="fast-mode rank")
    for field_ in (rat, FieldSpec.prime(7)):
        for _ in range(20):
            r, c = rng.randint(1, 5), rng.randint(1, 5)
            a = _random_matrix(rng, r, c, field_)
            result.check(a.rank() == a.transpose().rank(), field=field_.label, check="rank of transpose")
            result.check(len(a.kernel_vectors()) == c - a.rank(), field=field_.label, check="rank-nullity")
            u = Subspace.span(_random_matrix(rng, 4, 2, field_).columns(), 4, field_)
            w = Subspace.span(_random_matrix(rng, 4, 2, field_).columns(), 4, field_)
            result.check(u.sum(w).dim + u.intersect(w).dim == u.dim + w.dim, field=field_.label, check="Grassmann")
    return result


def poset_suite(seed: int) -> SuiteResult:
    result = SuiteResult("poset")
    for p in poset_corpus(seed):
        result.check(not p.check_invariants(), poset=p.elements, check="order axioms")
        result.check(not mobius(p).row_sum_violations(), poset=p.elements, check="Möbius row sums")
        chi = euler_char_mobius(p)
        result.check(chi == euler_char_hall(p) == euler_char_bounded(p), poset=p.elements, check="Euler characteristics")
    for n in (2, 3, 4):
        result.check(euler_char_mobius(Hypergraph.powerset(n, include_empty=False).poset()) == 1, n=n, check="simplex")
        result.check(euler_char_mobius(Hypergraph.boundary(n).poset()) == 1 + (-1) ** n, n=n, check="boundary")
    return result


def presheaf_suite(seed: int) -> SuiteResult:
    result = SuiteResult("presheaf")
    functors = presheaf_corpus(seed)
    rat = FieldSpec.rationals()
    for h in hypergraph_corpus(seed, samples=0):
        functors.extend([free_presheaf(h, rat), reduced_presheaf(h, rat)])
    for v in functors:
        holds = check_condition_g(v).holds
        decomposition = interaction_decomposition(v)
        result.check(holds == decomposition.succeeded, presheaf=v.name, poset=v.poset.elements, check="G iff decomposable")
        if decomposition.succeeded:
            result.check(not decomposition.decomposition.law_violations(), presheaf=v.name, check="projector laws")
    return result


def cech_suite(seed: int) -> SuiteResult:
    result = SuiteResult("cech")
    rat = FieldSpec.rationals()
    for h in hypergraph_corpus(seed, exhaustive_vertices=3, samples=5):
        f = free_copresheaf(h, rat)
        cover = canonical_cover(f.poset, "lower")
        full = cech_complex(cover, f, 3, "full")
        alternating = cech_complex(cover, f, 3, "alternating")
        result.check(not full.delta_squared_violations() and not alternating.delta_squared_violations(),
                     hypergraph=h.labels, check="delta squared")
        result.check(full.cohomology_dims() == alternating.cohomology_dims(), hypergraph=h.labels, check="full vs alternating")
        leray = cohomology_profile(f, 3, leray_cover(f.poset, "lower")).dims
        result.check(leray == alternating.cohomology_dims(), hypergraph=h.labels, check="Leray vs canonical")
    return result


def nerve_suite(seed: int) -> SuiteResult:
    result = SuiteResult("nerve")
    rng = random.Random(seed)
    rat = FieldSpec.rationals()
    for p in poset_corpus(seed, count=8, max_size=CORPUS_MAX_POSET_SIZE):
        functors = [constant_presheaf(p, rat), random_injective_presheaf(p, rng, FieldSpec.prime(RANDOM_PRESHEAF_PRIME))]
        covers = cover_corpus(p, "upper", seed)
        for v in functors:
            try:
                for cover in covers:
                    report = SubdivisionComparison(cover, v, HOMOTOPY_MAX_DEGREE).verify(raise_on_failure=False)
                    result.check(report.verified, poset=p.elements, cover=cover.names, check="homotopy identities")
                for fine, coarse in refining_pairs(covers):
                    prism = projection_homotopy(fine, coarse, v, HOMOTOPY_MAX_DEGREE, raise_on_failure=False)
                    result.check(prism.verified, poset=p.elements, fine=fine.names, coarse=coarse.names, check="prism")
            except CheckFailure as e:
                result.check(False, poset=p.elements, check=e.message, witness=e.witness)
            if structural_predicates(p).conditional_products:
                report = compare_cech_nerve(v, 3, raise_on_failure=False)
                result.check(report.isomorphic, poset=p.elements, check="Čech vs nerve")
        for cover in covers:
            ip = intersection_poset(cover)
            chains = enumerate_chains(len(ip.cells), ip.contains, 3, "full")
            result.check(not simplicial_identity_violations([c for level in chains for c in level]),
                         poset=p.elements, check="simplicial identities")
    return result


def marginal_suite(seed: int) -> SuiteResult:
    result = SuiteResult("marginal")
    rat = FieldSpec.rationals()
    corpus = hypergraph_corpus(seed)
    for h in corpus:
        labels = list(h.labels)
        intersection = check_intersection_property(h)
        h0_free = cohomology_profile(free_copresheaf(h, rat), 1).dims[0]
        result.check(brute_force_h0(h, True, rat) == pseudomarginal_dim(h, rat), hypergraph=labels, check="oracle restricted")
        result.check(brute_force_h0(h, False, rat) == h0_free, hypergraph=labels, check="oracle free")
        if not intersection.weak:
            continue
        try:
            free = euler_char_sheaf(h, rat)
        except CheckFailure as e:
            result.check(False, hypergraph=labels, check=e.message)
            continue
        result.check(free.euler == index_formula(h), hypergraph=labels, check="index formula")
        result.check(free.euler == pseudomarginal_dim(h, rat) + euler_char_mobius(h.poset()),
                     hypergraph=labels, check="Euler split")
        result.check(constant_split(h, rat).holds, hypergraph=labels, check="free splits")
        restricted = cohomology_profile(restricted_copresheaf(h, rat), free.max_degree).dims
        result.check(not any(restricted[1:]), hypergraph=labels, check="restricted acyclic")
        if intersection.strong:
            result.check(not any(free.dims[1:]), hypergraph=labels, check="free acyclic")
    for inclusion in inclusion_corpus(corpus, seed):
        try:
            report = marginal_surjectivity(inclusion.small, inclusion.large, rat)
        except (CheckFailure, InputError) as e:
            result.check(False, hypergraph=list(inclusion.large.labels), check=e.message)
            continue
        weak = all(report.weak_intersection.values())
        result.check(report.surjective or not weak, hypergraph=list(inclusion.large.labels), check="surjectivity")
    named = named_hypergraphs()
    for n in (1, 2, 3):
        for c in (1, 2, 3):
            h = Hypergraph.powerset(n, c, include_empty=False)
            result.check(euler_char_sheaf(h, rat).dims[0] == simplex_h0(n, c), n=n, N=c, check="simplex closed form")
    h = named["boundary_with_empty"]
    result.check(euler_char_sheaf(h, rat).dims[0] == boundary_h0(3, 2), check="boundary closed form")
    return result


SUITES: Dict[str, Callable[[int], SuiteResult]] = {
    "linalg": linalg_suite,
    "poset": poset_suite,
    "presheaf": presheaf_suite,
    "cech": cech_suite,
    "nerve": nerve_suite,
    "marginal": marginal_suite,
}


def run_self_test(module: str = "all", seed: int = 0) -> Dict[str, Any]:
    """
    Run one module's suite, or all of them.

    Raises:
        InputError: On an unknown module name
        CheckFailure: When any suite reports a failure, with the per-suite results
    """
    if module != "all" and module not in SUITES:
        raise InputError(f"Unknown self-test module {module!r}; expected one of {list(MODULES)} or 'all'")
    names = list(MODULES) if module == "all" else [module]
    results = {}
    for name in names:
        suite = SUITES[name](seed)
        logger.info(f"Self-test {name}: {suite.checked} checks, {len(suite.failures)} failures")
        results[name] = suite.to_json()
    summary = {"seed": seed, "suites": results, "passed": all(r["passed"] for r in results.values())}
    if not summary["passed"]:
        raise CheckFailure("Self-test failed", summary)
    return summary
