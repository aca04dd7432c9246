"""Hypergraphs of finite faces with per-vertex cardinalities."""

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import prod
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .poset import Poset
from ..utils.errors import InputError
from ..utils.logging import get_logger

logger = get_logger(__name__)

Face = Tuple[str, ...]
Configuration = Tuple[int, ...]


def face_label(face: Face) -> str:
    """Canonical element identifier of a face, e.g. "{1,2}" and "{}" for the empty face."""
    return "{" + ",".join(face) + "}"


@dataclass(frozen=True)
class Hypergraph:
    """
    Faces over an ordered vertex set, with a cardinality N_i >= 1 per used vertex.

    Faces are stored as vertex tuples sorted by vertex order, so set equality is
    syntactic. The face order is the declared order.
    """

    vertices: Tuple[str, ...]
    faces: Tuple[Face, ...]
    cardinalities: Mapping[str, int] = field(default_factory=dict)

    @classmethod
    def create(cls, vertices: Sequence, faces: Sequence[Sequence],
               cardinalities: Optional[Mapping] = None, default_cardinality: Optional[int] = None) -> "Hypergraph":
        """
        Validate and canonicalize a hypergraph.

        Args:
            vertices: Vertex names (converted to strings)
            faces: Faces as vertex lists
            cardinalities: N_i per vertex
            default_cardinality: N used for vertices missing from `cardinalities`

        Returns:
            The hypergraph

        Raises:
            InputError: On unknown vertices, duplicate faces or missing/invalid cardinalities
        """
        verts = tuple(str(v) for v in vertices)
        if len(set(verts)) != len(verts):
            raise InputError(f"Duplicate vertex in {list(verts)}")
        order = {v: i for i, v in enumerate(verts)}

        canonical: List[Face] = []
        seen: Dict[Face, int] = {}
        for raw in faces:
            names = [str(v) for v in raw]
            for v in names:
                if v not in order:
                    raise InputError(f"Face {names} uses unknown vertex {v}")
            if len(set(names)) != len(names):
                raise InputError(f"Face {names} repeats a vertex")
            face = tuple(sorted(names, key=order.__getitem__))
            if face in seen:
                raise InputError(f"Duplicate face: {face_label(face)}")
            seen[face] = len(canonical)
            canonical.append(face)

        cards: Dict[str, int] = {}
        given = {str(k): v for k, v in (cardinalities or {}).items()}
        for v in given:
            if v not in order:
                raise InputError(f"Cardinality given for unknown vertex {v}")
        used = {v for face in canonical for v in face}
        for v in verts:
            n = given.get(v, default_cardinality)
            if n is None:
                if v in used:
                    raise InputError(f"Missing cardinality for vertex {v}")
                continue
            if isinstance(n, bool) or not isinstance(n, int) or n < 1:
                raise InputError(f"Cardinality of vertex {v} must be a positive integer, got {n!r}")
            cards[v] = n
        return cls(verts, tuple(canonical), cards)

    @classmethod
    def powerset(cls, n: int, cardinality: int = 2, include_empty: bool = True) -> "Hypergraph":
        """All subsets of {1..n} (the simplex), optionally without the empty face."""
        verts = [str(i) for i in range(1, n + 1)]
        faces = [c for k in range(0 if include_empty else 1, n + 1) for c in itertools.combinations(verts, k)]
        return cls.create(verts, faces, default_cardinality=cardinality)

    @classmethod
    def boundary(cls, n: int, cardinality: int = 2, include_empty: bool = False) -> "Hypergraph":
        """Proper subsets of {1..n} (the boundary of the simplex)."""
        verts = [str(i) for i in range(1, n + 1)]
        faces = [c for k in range(0 if include_empty else 1, n) for c in itertools.combinations(verts, k)]
        return cls.create(verts, faces, default_cardinality=cardinality)

    @cached_property
    def labels(self) -> Tuple[str, ...]:
        return tuple(face_label(f) for f in self.faces)

    @cached_property
    def _by_label(self) -> Dict[str, Face]:
        return dict(zip(self.labels, self.faces))

    def face_of(self, label: str) -> Face:
        try:
            return self._by_label[label]
        except KeyError:
            raise InputError(f"Unknown face: {label}")

    def n_configurations(self, face: Face) -> int:
        """N_alpha = prod of N_i over the face (1 for the empty face)."""
        return prod(self.cardinalities[v] for v in face)

    def configurations(self, face: Face) -> List[Configuration]:
        """Configurations of a face in lexicographic order."""
        return list(itertools.product(*(range(self.cardinalities[v]) for v in face)))

    @staticmethod
    def project(config: Configuration, face: Face, sub: Face) -> Configuration:
        """Restriction x_alpha -> x_beta for beta contained in alpha."""
        position = {v: k for k, v in enumerate(face)}
        return tuple(config[position[v]] for v in sub)

    def configuration_index(self, config: Configuration, face: Face) -> int:
        """Position of a configuration in the lexicographic order."""
        index = 0
        for value, v in zip(config, face):
            index = index * self.cardinalities[v] + value
        return index

    def is_downward_closed(self) -> bool:
        faces = set(self.faces)
        return all(
            sub in faces
            for face in self.faces
            for k in range(1, len(face))
            for sub in itertools.combinations(face, k)
        )

    def sub_hypergraph(self, labels: Sequence[str]) -> "Hypergraph":
        keep = set(labels)
        faces = [f for f, lab in zip(self.faces, self.labels) if lab in keep]
        return Hypergraph(self.vertices, tuple(faces), dict(self.cardinalities))

    def poset(self) -> Poset:
        return poset_from_hypergraph(self)

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "faces": [list(f) for f in self.faces],
            "cardinalities": dict(self.cardinalities),
        }


def poset_from_hypergraph(h: Hypergraph) -> Poset:
    """Faces ordered by inclusion: arrow(alpha, beta) iff beta is a subset of alpha."""
    sets = [frozenset(f) for f in h.faces]
    down = [[j for j, t in enumerate(sets) if t <= s] for s in sets]
    poset = Poset(h.labels, down)
    logger.debug(f"Built face poset with {len(poset)} elements")
    return poset


@dataclass(frozen=True)
class IntersectionReport:
    strong: bool
    weak: bool
    strong_witness: Optional[Tuple[str, str]] = None
    weak_witness: Optional[Tuple[str, str]] = None

    def to_json(self) -> dict:
        return {
            "strong": self.strong,
            "weak": self.weak,
            "strong_witness": list(self.strong_witness) if self.strong_witness else None,
            "weak_witness": list(self.weak_witness) if self.weak_witness else None,
        }


def check_intersection_property(h: Hypergraph) -> IntersectionReport:
    """
    Strong: every pairwise intersection is a face. Weak: every nonempty one is.

    Witnesses are the first failing pair in face order.
    """
    faces = {frozenset(f) for f in h.faces}
    strong_witness = weak_witness = None
    for i, j in itertools.combinations(range(len(h.faces)), 2):
        meet = frozenset(h.faces[i]) & frozenset(h.faces[j])
        if meet in faces:
            continue
        pair = (h.labels[i], h.labels[j])
        if strong_witness is None:
            strong_witness = pair
        if meet and weak_witness is None:
            weak_witness = pair
            break
    return IntersectionReport(strong_witness is None, weak_witness is None, strong_witness, weak_witness)
