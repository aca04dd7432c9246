"""Parsing and validation of poset, hypergraph, presheaf and cover documents."""

import json
from typing import Any, Dict, List, Mapping, Optional, Sequence, Union

from ..cech import canonical_cover, make_cover, maximal_cover
from ..linalg import Matrix
from ..poset import Hypergraph, Poset
from ..presheaf import (
    constant_copresheaf,
    constant_presheaf,
    free_copresheaf,
    free_presheaf,
    functor_from_maps,
    reduced_presheaf,
    restricted_copresheaf,
)
from .errors import InputError, ValidationError
from .logging import get_logger

logger = get_logger(__name__)

__all__ = ["InputValidator", "ValidationError"]

FUNCTOR_KINDS = ("free", "reduced", "free_copresheaf", "restricted", "constant_presheaf", "constant_copresheaf")


class InputValidator:
    """Turns JSON documents into domain objects, raising InputError or ValidationError."""

    @staticmethod
    def parse_json(text: str, source: str = "input") -> Any:
        """
        Decode JSON text.

        Raises:
            InputError: On malformed JSON, with the line and column of the problem
        """
        try:
            return json.loads(text)
        except json.JSONDecodeError as e:
            raise InputError(f"Malformed JSON in {source}: {e.msg}", line=e.lineno, column=e.colno)

    @staticmethod
    def _require(doc: Mapping, key: str, kind: type, what: str):
        if not isinstance(doc, Mapping):
            raise ValidationError(f"A {what} must be a JSON object")
        if key not in doc:
            raise ValidationError(f"A {what} needs the key {key!r}")
        value = doc[key]
        if not isinstance(value, kind):
            raise ValidationError(f"{what}.{key} must be a {kind.__name__}")
        return value

    @staticmethod
    def document_kind(doc: Any) -> str:
        """'hypergraph', 'poset' or 'functor'."""
        if isinstance(doc, Mapping):
            if "maps" in doc or "functor" in doc:
                return "functor"
            if "faces" in doc:
                return "hypergraph"
            if "elements" in doc:
                return "poset"
        raise ValidationError("Input is neither a poset, a hypergraph nor a functor document")

    @staticmethod
    def parse_poset(doc: Mapping):
        """{"elements": [...], "arrows": [[a, b], ...]} with arrow a -> b meaning b <= a."""
        elements = InputValidator._require(doc, "elements", list, "poset")
        arrows = doc.get("arrows", [])
        if not isinstance(arrows, list):
            raise ValidationError("poset.arrows must be a list")
        names = [str(e) for e in elements]
        pairs = []
        for k, arrow in enumerate(arrows):
            if not isinstance(arrow, list) or len(arrow) != 2:
                raise ValidationError(f"Arrow {k} must be a pair [source, target]")
            pairs.append((str(arrow[0]), str(arrow[1])))
        poset = Poset.from_generators(names, pairs)
        logger.debug(f"Parsed poset with {len(poset)} elements")
        return poset

    @staticmethod
    def parse_hypergraph(doc: Mapping):
        """{"vertices": [...], "faces": [[...]], "cardinalities": {v: N}, "cardinality": N}."""
        faces = InputValidator._require(doc, "faces", list, "hypergraph")
        vertices = doc.get("vertices")
        if vertices is None:
            vertices = []
            for face in faces:
                for v in face:
                    if str(v) not in vertices:
                        vertices.append(str(v))
        cards = doc.get("cardinalities", {})
        if not isinstance(cards, Mapping):
            raise ValidationError("hypergraph.cardinalities must be an object")
        for face in faces:
            if not isinstance(face, list):
                raise ValidationError("Every face must be a list of vertices")
        return Hypergraph.create(vertices, faces, cards, doc.get("cardinality"))

    @staticmethod
    def parse_matrix(rows: Any, field, shape: Sequence[int], where: str):
        """Dense nested lists of ints or "p/q" strings with an exact expected shape."""
        if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
            raise ValidationError(f"Matrix {where} must be a list of rows")
        n_rows, n_cols = shape
        if len(rows) != n_rows or any(len(r) != n_cols for r in rows):
            found = (len(rows), len(rows[0]) if rows else 0)
            raise ValidationError(f"Matrix {where} has shape {found}, expected {tuple(shape)}")
        return Matrix.from_rows(rows, field, cols=n_cols)

    @staticmethod
    def parse_functor(doc: Mapping, field, variance: Optional[str] = None, default_kind: str = "free"):
        """
        Either explicit maps over a poset or a construction over a hypergraph.

        Explicit: {"variance": ..., "poset": {...}, "dims": {a: d}, "maps": {"a->b": rows}}.
        Presheaf maps a->b have shape dims[a] x dims[b], copresheaf maps dims[b] x dims[a].
        Construction: {"hypergraph": {...}, "functor": kind} with kind in FUNCTOR_KINDS.
        """
        if "maps" not in doc:
            h = InputValidator.parse_hypergraph(doc.get("hypergraph", doc))
            kind = doc.get("functor", default_kind)
            builders = {
                "free": free_presheaf,
                "reduced": reduced_presheaf,
                "free_copresheaf": free_copresheaf,
                "restricted": restricted_copresheaf,
                "constant_presheaf": lambda hg, f: constant_presheaf(hg.poset(), f),
                "constant_copresheaf": lambda hg, f: constant_copresheaf(hg.poset(), f),
            }
            if kind not in builders:
                raise ValidationError(f"Unknown functor {kind!r}; expected one of {list(FUNCTOR_KINDS)}")
            return builders[kind](h, field)

        variance = doc.get("variance", variance or "presheaf")
        poset_doc = InputValidator._require(doc, "poset", dict, "functor")
        poset = InputValidator.parse_poset(poset_doc)
        dims_doc = InputValidator._require(doc, "dims", dict, "functor")
        dims = []
        for e in poset.elements:
            d = dims_doc.get(e)
            if isinstance(d, bool) or not isinstance(d, int) or d < 0:
                raise ValidationError(f"Dimension of {e} must be a non-negative integer, got {d!r}")
            dims.append(d)
        maps = {}
        for key, rows in InputValidator._require(doc, "maps", dict, "functor").items():
            parts = key.split("->")
            if len(parts) != 2:
                raise ValidationError(f"Map key {key!r} must look like 'a->b'")
            a, b = (s.strip() for s in parts)
            if a not in poset or b not in poset:
                raise ValidationError(f"Map {key!r} names an unknown element")
            i, j = poset.index(a), poset.index(b)
            if not poset.arrow_idx(i, j) or i == j:
                raise ValidationError(f"Map {key!r} is not along a strict arrow")
            shape = (dims[i], dims[j]) if variance == "presheaf" else (dims[j], dims[i])
            maps[(i, j)] = InputValidator.parse_matrix(rows, field, shape, key)
        functor = functor_from_maps(variance, poset, dims, maps, field, doc.get("name", ""))
        return functor.validate()

    @staticmethod
    def parse_cover(spec: Union[str, List, None], poset, tag: str):
        """'canonical', 'maximal', or a list of member label lists."""
        if spec is None or spec == "canonical":
            return canonical_cover(poset, tag)
        if spec == "maximal":
            return maximal_cover(poset, tag)
        if isinstance(spec, list) and all(isinstance(m, list) for m in spec):
            for member in spec:
                for e in member:
                    if str(e) not in poset:
                        raise ValidationError(f"Cover names unknown element {e}")
            return make_cover(poset, tag, [[str(e) for e in m] for m in spec])
        raise ValidationError("A cover is 'canonical', 'maximal' or a list of element lists")

    @staticmethod
    def parse_vertex_map(doc: Optional[Mapping]) -> Optional[Dict[str, str]]:
        if doc is None:
            return None
        if not isinstance(doc, Mapping):
            raise ValidationError("A vertex map must be an object {vertex: image}")
        return {str(k): str(v) for k, v in doc.items()}

    @staticmethod
    def validate_max_degree(max_degree: int) -> int:
        if isinstance(max_degree, bool) or not isinstance(max_degree, int) or max_degree < 1:
            raise ValidationError(f"max_degree must be a positive integer, got {max_degree!r}")
        return max_degree
