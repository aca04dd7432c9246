"""
One entry point per pipeline, shared by the command line and the MCP server.

Every method takes parsed JSON documents and returns a JSON-serializable dict. Failed
theorem checks raise CheckFailure with a witness; malformed input raises InputError.
"""

from typing import Any, Dict, Mapping, Optional, Sequence

from .cech import canonical_cover, cech_complex, relative_cohomology
from .config.constants import DEFAULT_MAX_DEGREE, DEFAULT_SEED
from .linalg import FieldSpec
from .marginal import (
    brute_force_h0,
    cohomology_profile,
    constant_split,
    marginal_report,
    marginal_surjectivity,
    pseudomarginal_dim,
)
from .nerve import compare_cech_nerve, nerve_complex, projection_homotopy, verify_homotopy
from .poset import (
    Hypergraph,
    Poset,
    chain_counts,
    check_intersection_property,
    components_and_finals,
    euler_char_bounded,
    euler_char_hall,
    euler_char_mobius,
    face_count_euler,
    mobius,
    structural_predicates,
)
from .presheaf import (
    InjectivePresheaf,
    PosetFunctor,
    check_condition_g,
    free_copresheaf,
    interaction_decomposition,
    interaction_dims_via_mobius,
)
from .utils.errors import CheckFailure, InputError
from .utils.logging import get_logger
from .utils.validation import InputValidator

logger = get_logger(__name__)


class SheafToolkit:
    """Pipelines over one coefficient field with shared degree and seed defaults."""

    def __init__(self, field: Optional[FieldSpec] = None, max_degree: Optional[int] = None,
                 seed: int = DEFAULT_SEED):
        self.field = field or FieldSpec.rationals()
        self.explicit_degree = max_degree is not None
        self.max_degree = InputValidator.validate_max_degree(max_degree) if self.explicit_degree else DEFAULT_MAX_DEGREE
        self.seed = seed

    # Document loading

    def poset(self, doc: Mapping) -> Poset:
        kind = InputValidator.document_kind(doc)
        if kind == "poset":
            return InputValidator.parse_poset(doc)
        if kind == "hypergraph":
            return InputValidator.parse_hypergraph(doc).poset()
        return self.functor(doc).poset

    @staticmethod
    def hypergraph(doc: Mapping) -> Hypergraph:
        kind = InputValidator.document_kind(doc)
        if kind == "hypergraph":
            return InputValidator.parse_hypergraph(doc)
        if kind == "functor" and "maps" not in doc:
            return InputValidator.parse_hypergraph(doc.get("hypergraph", doc))
        raise InputError("This command needs a hypergraph document")

    def functor(self, doc: Mapping, default_kind: str = "free") -> PosetFunctor:
        return InputValidator.parse_functor(doc, self.field, default_kind=default_kind)

    def presheaf(self, doc: Mapping, default_kind: str = "free") -> InjectivePresheaf:
        f = self.functor(doc, default_kind)
        if not isinstance(f, InjectivePresheaf):
            raise InputError(f"This command needs an injective presheaf, got a {f.variance}")
        return f

    # core-poset

    def mobius(self, doc: Mapping) -> Dict[str, Any]:
        p = self.poset(doc)
        table = mobius(p)
        violations = table.row_sum_violations()
        if violations:
            raise CheckFailure("Möbius row sums fail", [list(v) for v in violations[:5]])
        return {**table.to_json(), "euler": table.total()}

    def euler(self, doc: Mapping) -> Dict[str, Any]:
        p = self.poset(doc)
        result = {
            "euler": euler_char_mobius(p),
            "hall": euler_char_hall(p),
            "bounded": euler_char_bounded(p),
            "chain_counts": chain_counts(p),
        }
        if InputValidator.document_kind(doc) == "hypergraph":
            result["face_count"] = face_count_euler(InputValidator.parse_hypergraph(doc))
        if not result["euler"] == result["hall"] == result["bounded"]:
            raise CheckFailure("Euler characteristics disagree", result)
        return result

    def predicates(self, doc: Mapping) -> Dict[str, Any]:
        p = self.poset(doc)
        result = {**structural_predicates(p).to_json(), **components_and_finals(p).to_json()}
        if InputValidator.document_kind(doc) == "hypergraph":
            result["intersection"] = check_intersection_property(InputValidator.parse_hypergraph(doc)).to_json()
        return result

    # presheaf

    def check_g(self, doc: Mapping) -> Dict[str, Any]:
        v = self.presheaf(doc)
        return {"presheaf": v.name, "dims": list(v.dims), **check_condition_g(v).to_json()}

    def decompose(self, doc: Mapping) -> Dict[str, Any]:
        """
        Interaction decomposition; the projector laws are checked on success and, for a
        free presheaf, the dims against the Möbius formula.
        """
        v = self.presheaf(doc)
        result = interaction_decomposition(v)
        out = {"presheaf": v.name, **result.to_json()}
        if not result.succeeded:
            return out
        problems = result.decomposition.law_violations()
        if problems:
            raise CheckFailure("Projector laws fail", problems[:5])
        out["condition_g"] = check_condition_g(v).holds
        if "maps" not in doc and v.name == "free":
            expected = interaction_dims_via_mobius(self.hypergraph(doc))
            out["mobius_dims"] = expected
            if expected != out["dims"]:
                raise CheckFailure("Interaction dims differ from the Möbius formula",
                                   {"decomposition": out["dims"], "mobius": expected})
        return out

    # cech

    def cech(self, doc: Mapping, mode: str = "alternating", cover: Any = None,
             subset: Optional[Sequence[str]] = None, export: bool = False,
             functor_kind: str = "free_copresheaf") -> Dict[str, Any]:
        """Čech cohomology of a functor on a cover; relative to `subset` when given."""
        f = self.functor(doc, default_kind=functor_kind)
        u = InputValidator.parse_cover(cover, f.poset, f.topology)
        if subset:
            report = relative_cohomology(f, list(subset), self.max_degree, u)
            if not report.exact:
                raise CheckFailure("Long exact sequence fails", report.violations[0])
            return {"functor": f.name, "cover": u.to_json(), "relative": report.to_json()}
        complex_ = cech_complex(u, f, self.max_degree, mode)
        bad = complex_.delta_squared_violations()
        if bad:
            raise CheckFailure("delta composed with delta is not zero", {"degree": bad[0]})
        out = {
            "functor": f.name,
            "variance": f.variance,
            "cover": u.to_json(),
            "mode": mode,
            "cochain_dims": complex_.dims(),
            "cohomology": complex_.cohomology_dims(),
            "complete": complex_.complete,
        }
        if export:
            out["complex"] = complex_.to_json()
        logger.info(f"Čech cohomology of {f.name} on {len(u.names)} opens: {out['cohomology']}")
        return out

    # nerve

    def nerve(self, doc: Mapping, mode: str = "nondegenerate") -> Dict[str, Any]:
        f = self.functor(doc)
        complex_ = nerve_complex(f.poset, f, f.topology, self.max_degree, mode)
        bad = complex_.delta_squared_violations()
        if bad:
            raise CheckFailure("delta composed with delta is not zero", {"degree": bad[0]})
        return {
            "functor": f.name,
            "system": f.topology,
            "mode": mode,
            "cochain_dims": complex_.dims(),
            "cohomology": complex_.cohomology_dims(),
        }

    def compare(self, doc: Mapping, mode: str = "alternating") -> Dict[str, Any]:
        v = self.presheaf(doc)
        return compare_cech_nerve(v, self.max_degree, mode).to_json()

    def verify_homotopy(self, doc: Mapping, cover: Any = None) -> Dict[str, Any]:
        """
        Both homotopy identities on the given cover (maximal by default), and the prism
        homotopy from the canonical cover onto it.
        """
        f = self.functor(doc)
        u = InputValidator.parse_cover(cover if cover is not None else "maximal", f.poset, f.topology)
        homotopy = verify_homotopy(u, f, self.max_degree)
        prism = projection_homotopy(canonical_cover(f.poset, f.topology), u, f, self.max_degree)
        return {"cover": u.to_json(), "homotopy": homotopy.to_json(), "prism": prism.to_json()}

    # marginal

    def marginal(self, doc: Mapping, with_oracle: bool = False) -> Dict[str, Any]:
        h = self.hypergraph(doc)
        degree = self.max_degree if self.explicit_degree else None
        report = marginal_report(h, self.field, degree, with_oracle)
        split = constant_split(h, self.field, degree)
        out = {**report.to_json(), "split": split.to_json()}
        if report.violations:
            raise CheckFailure("Marginal identities fail", report.violations[0])
        if split.weak_intersection and not split.holds:
            raise CheckFailure("Free sheaf does not split", split.violations[0])
        return out

    def surjectivity(self, small: Mapping, large: Mapping,
                     vertex_map: Optional[Mapping] = None) -> Dict[str, Any]:
        a, b = self.hypergraph(small), self.hypergraph(large)
        report = marginal_surjectivity(a, b, self.field, InputValidator.parse_vertex_map(vertex_map))
        if not report.surjective and all(report.weak_intersection.values()):
            raise CheckFailure("Restriction of pseudomarginals is not surjective", report.to_json())
        return report.to_json()

    def oracle(self, doc: Mapping) -> Dict[str, Any]:
        """Brute-force H^0 against the section pipeline for the free and restricted sheaves."""
        h = self.hypergraph(doc)
        result = {
            "oracle_free": brute_force_h0(h, False, self.field),
            "oracle_restricted": brute_force_h0(h, True, self.field),
            "pipeline_free": cohomology_profile(free_copresheaf(h, self.field), 1).dims[0],
            "pipeline_restricted": pseudomarginal_dim(h, self.field),
        }
        result["agree"] = (
            result["oracle_free"] == result["pipeline_free"]
            and result["oracle_restricted"] == result["pipeline_restricted"]
        )
        if not result["agree"]:
            raise CheckFailure("Oracle and section pipeline disagree", result)
        return result

    def self_test(self, module: str = "all") -> Dict[str, Any]:
        from .selftest import run_self_test

        return run_self_test(module, self.seed)
