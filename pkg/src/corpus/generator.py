"""Deterministic corpora of hypergraphs, posets, presheaves, covers and inclusions."""

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..cech import Cover, basis_open, canonical_cover, maximal_cover
from ..config.constants import (
    CORPUS_CARDINALITIES,
    CORPUS_EXHAUSTIVE_VERTICES,
    CORPUS_MAX_POSET_SIZE,
    CORPUS_MAX_VERTICES,
    CORPUS_RANDOM_PRESHEAVES,
    CORPUS_RANDOM_SAMPLES,
    CORPUS_UNIFORM_VERTICES,
    DEFAULT_SEED,
    RANDOM_AMBIENT_DIM,
    RANDOM_PRESHEAF_PRIME,
)
from ..linalg import FieldSpec
from ..poset import Hypergraph, Poset
from ..presheaf import InjectivePresheaf, random_injective_presheaf
from ..utils.logging import get_logger

logger = get_logger(__name__)

FaceFamily = Tuple[Tuple[int, ...], ...]


def named_hypergraphs(cardinality: int = 2) -> Dict[str, Hypergraph]:
    """The small examples every suite starts from."""
    return {
        "single": Hypergraph.create(["1"], [["1"]], default_cardinality=cardinality),
        "edge": Hypergraph.create(["1", "2"], [["1"], ["2"], ["1", "2"]], default_cardinality=cardinality),
        "two_points": Hypergraph.create(["1", "2"], [["1"], ["2"]], default_cardinality=cardinality),
        "simplex": Hypergraph.powerset(2, cardinality, include_empty=False),
        "boundary": Hypergraph.boundary(3, cardinality),
        "boundary_with_empty": Hypergraph.boundary(3, cardinality, include_empty=True),
        "full_simplex": Hypergraph.powerset(3, cardinality, include_empty=False),
    }


def _canonical_family(family: Sequence[Tuple[int, ...]], n: int) -> FaceFamily:
    best = None
    for perm in itertools.permutations(range(n)):
        image = tuple(sorted(tuple(sorted(perm[v] for v in face)) for face in family))
        if best is None or image < best:
            best = image
    return best


def is_intersection_closed(family: Sequence[Tuple[int, ...]]) -> bool:
    """Every nonempty pairwise intersection of faces is itself a face."""
    faces = {frozenset(f) for f in family}
    return all(not (a & b) or (a & b) in faces for a, b in itertools.combinations(faces, 2))


@lru_cache(maxsize=None)
def _families(n: int, intersection_closed: bool) -> Tuple[FaceFamily, ...]:
    subsets = [s for k in range(1, n + 1) for s in itertools.combinations(range(n), k)]
    seen = set()
    for mask in range(1, 2 ** len(subsets)):
        family = [s for b, s in enumerate(subsets) if mask >> b & 1]
        if {v for face in family for v in face} != set(range(n)):
            continue
        if intersection_closed and not is_intersection_closed(family):
            continue
        seen.add(_canonical_family(family, n))
    return tuple(sorted(seen, key=lambda f: (len(f), f)))


def face_families(n: int, intersection_closed: bool = True) -> List[FaceFamily]:
    """
    Every nonempty family of nonempty subsets of n vertices, up to relabeling, using all
    vertices. By default only families closed under nonempty pairwise intersection.
    """
    return list(_families(n, intersection_closed))


def _hypergraph(family: FaceFamily, n: int, cards: Sequence[int], with_empty: bool = False) -> Hypergraph:
    vertices = [str(v + 1) for v in range(n)]
    faces = sorted(family, key=lambda f: (len(f), f))
    named = ([[]] if with_empty else []) + [[str(v + 1) for v in face] for face in faces]
    return Hypergraph.create(vertices, named, {v: c for v, c in zip(vertices, cards)})


def random_hypergraph(rng: random.Random, n: int, max_faces: int = 6,
                      cardinalities: Sequence[int] = CORPUS_CARDINALITIES) -> Hypergraph:
    subsets = [s for k in range(1, n + 1) for s in itertools.combinations(range(n), k)]
    family = tuple(rng.sample(subsets, rng.randint(1, min(max_faces, len(subsets)))))
    used = sorted({v for face in family for v in face})
    relabel = {v: k for k, v in enumerate(used)}
    family = tuple(tuple(relabel[v] for v in face) for face in family)
    cards = [rng.choice(cardinalities) for _ in used]
    return _hypergraph(family, len(used), cards)


def hypergraph_corpus(seed: int = DEFAULT_SEED, exhaustive_vertices: int = CORPUS_EXHAUSTIVE_VERTICES,
                      random_vertices: int = CORPUS_MAX_VERTICES, samples: int = CORPUS_RANDOM_SAMPLES,
                      cardinalities: Sequence[int] = CORPUS_CARDINALITIES,
                      uniform_vertices: int = CORPUS_UNIFORM_VERTICES) -> List[Hypergraph]:
    """
    Every intersection-closed face family on up to `exhaustive_vertices` vertices up to
    relabeling, followed by seeded random families on `random_vertices` vertices with mixed
    cardinalities (these need not be intersection-closed).

    Families on at most `uniform_vertices` vertices appear once per uniform cardinality and
    once more with the empty face. Larger families appear once, the cardinality cycling
    through `cardinalities` and the empty face added to every second one.
    """
    corpus: List[Hypergraph] = []
    for n in range(1, exhaustive_vertices + 1):
        for k, family in enumerate(face_families(n)):
            cycled = cardinalities[k % len(cardinalities)]
            if n <= uniform_vertices:
                for c in cardinalities:
                    corpus.append(_hypergraph(family, n, [c] * n))
                corpus.append(_hypergraph(family, n, [cycled] * n, with_empty=True))
            else:
                corpus.append(_hypergraph(family, n, [cycled] * n, with_empty=bool(k % 2)))
    rng = random.Random(seed)
    for _ in range(samples):
        corpus.append(random_hypergraph(rng, random_vertices, cardinalities=cardinalities))
    logger.info(f"Hypergraph corpus: {len(corpus)} instances (seed {seed})")
    return corpus


def random_poset(rng: random.Random, size: int, density: float = 0.4) -> Poset:
    """Closure of random arrows i -> j with i < j, on elements a, b, c, ..."""
    elements = [chr(ord("a") + k) for k in range(size)]
    arrows = [(elements[i], elements[j]) for i, j in itertools.combinations(range(size), 2) if rng.random() < density]
    return Poset.from_generators(elements, arrows)


def poset_corpus(seed: int = DEFAULT_SEED, count: int = 20, max_size: int = CORPUS_MAX_POSET_SIZE) -> List[Poset]:
    """Face posets of the small named hypergraphs, then seeded random posets."""
    posets = [h.poset() for h in named_hypergraphs().values() if len(h.faces) <= max_size]
    rng = random.Random(seed)
    for _ in range(count):
        posets.append(random_poset(rng, rng.randint(1, max_size)))
    return posets


def presheaf_corpus(seed: int = DEFAULT_SEED, count: int = CORPUS_RANDOM_PRESHEAVES,
                    max_size: int = CORPUS_MAX_POSET_SIZE, prime: int = RANDOM_PRESHEAF_PRIME) -> List[InjectivePresheaf]:
    """Random injective presheaves of nested subspaces over a prime field."""
    rng = random.Random(seed)
    field = FieldSpec.prime(prime)
    result = []
    for _ in range(count):
        p = random_poset(rng, rng.randint(1, max_size))
        result.append(random_injective_presheaf(p, rng, field, ambient_dim=RANDOM_AMBIENT_DIM))
    return result


def random_cover(p: Poset, tag: str, rng: random.Random) -> Cover:
    """The basis opens of a random set of elements containing the extremal ones, plus one union."""
    base = maximal_cover(p, tag)
    chosen = {frozenset(m) for m in base.members}
    for i in range(len(p)):
        if rng.random() < 0.3:
            chosen.add(basis_open(p, i, tag))
    if len(p) >= 2:
        i, j = rng.sample(range(len(p)), 2)
        chosen.add(basis_open(p, i, tag) | basis_open(p, j, tag))
    members = sorted(chosen, key=lambda m: (len(m), sorted(m)))
    return Cover(p, tag, tuple(members), tuple(f"U{k}" for k in range(len(members))))


def cover_corpus(p: Poset, tag: str, seed: int = DEFAULT_SEED, extra: int = 2) -> List[Cover]:
    """Canonical and maximal covers of `p` followed by `extra` random ones, deduplicated."""
    rng = random.Random(seed)
    covers, seen = [], set()
    for cover in [canonical_cover(p, tag), maximal_cover(p, tag)] + [random_cover(p, tag, rng) for _ in range(extra)]:
        if cover.members not in seen:
            seen.add(cover.members)
            covers.append(cover)
    return covers


@dataclass(frozen=True)
class Inclusion:
    small: Hypergraph
    large: Hypergraph
    vertex_map: Optional[Dict[str, str]] = None


def inclusion_corpus(hypergraphs: Sequence[Hypergraph], seed: int = DEFAULT_SEED) -> Iterator[Inclusion]:
    """Sub-hypergraphs of each instance under the identity vertex map, always strict and simplicial."""
    rng = random.Random(seed)
    for h in hypergraphs:
        yield Inclusion(h, h)
        if len(h.faces) > 1:
            keep = rng.sample(h.labels, rng.randint(1, len(h.faces) - 1))
            yield Inclusion(h.sub_hypergraph([lab for lab in h.labels if lab in keep]), h)
