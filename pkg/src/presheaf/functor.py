"""Linear injective presheaves and surjective copresheaves on a finite poset."""

import random
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..linalg import FieldSpec, Matrix, Subspace
from ..poset import Poset
from ..utils.errors import InputError, ValidationError
from ..utils.logging import get_logger

logger = get_logger(__name__)

Arrow = Tuple[int, int]


class PosetFunctor:
    """
    Finite-dimensional vector spaces on the elements of a poset with one matrix per
    strict arrow a -> b, keyed by the index pair (a, b).

    Subclasses fix the variance: presheaf maps go V(b) -> V(a), copresheaf maps go
    F(a) -> F(b).
    """

    variance = ""
    topology = ""

    def __init__(self, poset: Poset, dims: Sequence[int], maps: Mapping[Arrow, Matrix],
                 field: FieldSpec, name: str = ""):
        if len(dims) != len(poset):
            raise InputError(f"Expected {len(poset)} dimensions, got {len(dims)}")
        self.poset = poset
        self.dims: Tuple[int, ...] = tuple(int(d) for d in dims)
        self.field = field
        self.name = name
        self._maps: Dict[Arrow, Matrix] = dict(maps)
        for (i, j) in poset_strict_arrows(poset):
            if (i, j) not in self._maps:
                raise ValidationError(
                    f"Missing map for arrow {poset.elements[i]}->{poset.elements[j]}"
                )
            expected = self.expected_shape(i, j)
            if self._maps[(i, j)].shape != expected:
                raise ValidationError(
                    f"Map {poset.elements[i]}->{poset.elements[j]} has shape "
                    f"{self._maps[(i, j)].shape}, expected {expected}"
                )

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name or 'unnamed'}, {len(self.poset)} elements)"

    def expected_shape(self, i: int, j: int) -> Tuple[int, int]:
        raise NotImplementedError

    def dim(self, element: str) -> int:
        return self.dims[self.poset.index(element)]

    def map_idx(self, i: int, j: int) -> Matrix:
        """Structure matrix of the arrow i -> j (identity when i == j)."""
        if i == j:
            return Matrix.identity(self.dims[i], self.field)
        try:
            return self._maps[(i, j)]
        except KeyError:
            raise InputError(f"No arrow {self.poset.elements[i]}->{self.poset.elements[j]}")

    def map_for(self, a: str, b: str) -> Matrix:
        return self.map_idx(self.poset.index(a), self.poset.index(b))

    def basis_open(self, i: int) -> frozenset:
        """Indices of the smallest open containing element i."""
        raise NotImplementedError

    def restriction(self, p: int, q: int) -> Matrix:
        """Restriction F(O(p)) -> F(O(q)) between basis opens, q in O(p)."""
        raise NotImplementedError

    @staticmethod
    def compose(first: Matrix, second: Matrix) -> Matrix:
        """Structure map of a -> c from those of a -> b (first) and b -> c (second)."""
        raise NotImplementedError

    def rank_violations(self) -> List[Tuple[str, str, int]]:
        """Arrows whose matrix fails injectivity (presheaf) or surjectivity (copresheaf)."""
        bad = []
        for (i, j), m in sorted(self._maps.items()):
            r = m.rank()
            if r != self.dims[j]:
                bad.append((self.poset.elements[i], self.poset.elements[j], r))
        return bad

    def functoriality_violations(self) -> List[Tuple[str, str, str]]:
        """Triples a -> b -> c whose composite differs from the direct map."""
        p = self.poset
        bad = []
        for (i, j) in poset_strict_arrows(p):
            for k in p.strict_targets(j):
                if self.compose(self.map_idx(i, j), self.map_idx(j, k)) != self.map_idx(i, k):
                    bad.append((p.elements[i], p.elements[j], p.elements[k]))
        return bad

    def validate(self) -> "PosetFunctor":
        """
        Check the rank condition and functoriality over every arrow.

        Raises:
            ValidationError: With the first offending arrow or triple
        """
        ranks = self.rank_violations()
        if ranks:
            a, b, r = ranks[0]
            kind = "injective" if self.variance == "presheaf" else "surjective"
            raise ValidationError(f"Map for {a}->{b} is not {kind} (rank {r})")
        triples = self.functoriality_violations()
        if triples:
            a, b, c = triples[0]
            raise ValidationError(f"Functoriality fails along {a}->{b}->{c}")
        return self

    def restricted_to(self, elements) -> "PosetFunctor":
        """The same functor on the induced subposet."""
        sub = self.poset.subposet(elements)
        original = [self.poset.index(e) for e in sub.elements]
        maps = {
            (a, b): self._maps[(original[a], original[b])]
            for a, b in poset_strict_arrows(sub)
        }
        return type(self)(sub, [self.dims[i] for i in original], maps, self.field, self.name)

    def to_json(self) -> dict:
        p = self.poset
        return {
            "variance": self.variance,
            "poset": p.to_json(),
            "dims": {e: d for e, d in zip(p.elements, self.dims)},
            "maps": {
                f"{p.elements[i]}->{p.elements[j]}": self._maps[(i, j)].to_json()
                for i, j in p.covering_pairs
            },
        }

    @classmethod
    def from_maps(cls, poset: Poset, dims: Sequence[int], maps: Mapping[Arrow, Matrix],
                  field: FieldSpec, name: str = "") -> "PosetFunctor":
        """
        Complete maps given on (at least) the covering arrows by composition.

        Maps given on non-covering arrows must agree with the composite.

        Raises:
            ValidationError: On a missing covering map or a disagreeing composite
        """
        complete: Dict[Arrow, Matrix] = {}
        covering = poset.covering_set

        def resolve(i: int, k: int) -> Matrix:
            if (i, k) in complete:
                return complete[(i, k)]
            if (i, k) in covering:
                if (i, k) not in maps:
                    raise ValidationError(
                        f"Missing map for covering arrow {poset.elements[i]}->{poset.elements[k]}"
                    )
                result = maps[(i, k)]
            else:
                j = next(j for a, j in poset.covering_pairs if a == i and poset.arrow_idx(j, k))
                result = cls.compose(resolve(i, j), resolve(j, k))
                if (i, k) in maps and maps[(i, k)] != result:
                    raise ValidationError(
                        f"Map given for {poset.elements[i]}->{poset.elements[k]} disagrees with the composite"
                    )
            complete[(i, k)] = result
            return result

        for i, k in poset_strict_arrows(poset):
            resolve(i, k)
        return cls(poset, dims, complete, field, name)


class InjectivePresheaf(PosetFunctor):
    """V with injective j_ab : V(b) -> V(a) for every arrow a -> b."""

    variance = "presheaf"
    topology = "upper"

    def expected_shape(self, i: int, j: int) -> Tuple[int, int]:
        return self.dims[i], self.dims[j]

    @staticmethod
    def compose(first: Matrix, second: Matrix) -> Matrix:
        return first @ second

    def basis_open(self, i: int) -> frozenset:
        return self.poset.up_indices(i)

    def restriction(self, p: int, q: int) -> Matrix:
        return self.map_idx(q, p)

    def image_subspace(self, i: int, j: int) -> Subspace:
        """V_ab = j_ab(V_b) inside V_a."""
        return Subspace.span(self.map_idx(i, j).columns(), self.dims[i], self.field)


class Copresheaf(PosetFunctor):
    """F with surjective pi^{ba} : F(a) -> F(b) for every arrow a -> b."""

    variance = "copresheaf"
    topology = "lower"

    def expected_shape(self, i: int, j: int) -> Tuple[int, int]:
        return self.dims[j], self.dims[i]

    @staticmethod
    def compose(first: Matrix, second: Matrix) -> Matrix:
        return second @ first

    def basis_open(self, i: int) -> frozenset:
        return self.poset.down_indices(i)

    def restriction(self, p: int, q: int) -> Matrix:
        return self.map_idx(p, q)


def poset_strict_arrows(p: Poset) -> List[Arrow]:
    return [(i, j) for i in range(len(p)) for j in p.strict_targets(i)]


def constant_presheaf(poset: Poset, field: FieldSpec, dim: int = 1) -> InjectivePresheaf:
    maps = {(i, j): Matrix.identity(dim, field) for i, j in poset_strict_arrows(poset)}
    return InjectivePresheaf(poset, [dim] * len(poset), maps, field, name="constant")


def constant_copresheaf(poset: Poset, field: FieldSpec, dim: int = 1) -> Copresheaf:
    maps = {(i, j): Matrix.identity(dim, field) for i, j in poset_strict_arrows(poset)}
    return Copresheaf(poset, [dim] * len(poset), maps, field, name="constant")


def indicator_presheaf(poset: Poset, gamma: str, field: FieldSpec, dim: int = 1) -> InjectivePresheaf:
    """K^dim on the elements mapping to gamma, zero elsewhere, identities in between."""
    g = poset.index(gamma)
    inside = poset.up_indices(g)
    dims = [dim if i in inside else 0 for i in range(len(poset))]
    maps = {}
    for i, j in poset_strict_arrows(poset):
        if j in inside:
            maps[(i, j)] = Matrix.identity(dim, field)
        else:
            maps[(i, j)] = Matrix.zeros(dims[i], 0, field)
    return InjectivePresheaf(poset, dims, maps, field, name=f"indicator{gamma}")


def random_injective_presheaf(poset: Poset, rng: random.Random, field: FieldSpec,
                              ambient_dim: int = 4, max_generators: int = 2) -> InjectivePresheaf:
    """
    A presheaf of nested subspaces of K^ambient_dim.

    Each element gets up to `max_generators` random vectors; V(a) is the span of the
    vectors of every element below a, and j_ab is the inclusion V(b) in V(a) written in
    the canonical bases.
    """
    if not field.is_prime_field:
        raise InputError("Random presheaves are drawn over a prime field")
    generators: List[List[Dict[int, int]]] = []
    for _ in poset.elements:
        vectors = []
        for _ in range(rng.randint(0, max_generators)):
            coords = [rng.randrange(field.p) for _ in range(ambient_dim)]
            vectors.append({k: c for k, c in enumerate(coords) if c})
        generators.append(vectors)

    spaces = [
        Subspace.span([v for j in sorted(poset.down_indices(i)) for v in generators[j]], ambient_dim, field)
        for i in range(len(poset))
    ]
    maps = {(i, j): spaces[i].coordinate_matrix(spaces[j].vectors) for i, j in poset_strict_arrows(poset)}
    presheaf = InjectivePresheaf(poset, [s.dim for s in spaces], maps, field, name="random")
    logger.debug(f"Random presheaf dims {presheaf.dims}")
    return presheaf


def functor_from_maps(variance: str, poset: Poset, dims: Sequence[int], maps: Mapping[Arrow, Matrix],
                      field: FieldSpec, name: Optional[str] = "") -> PosetFunctor:
    if variance == "presheaf":
        return InjectivePresheaf.from_maps(poset, dims, maps, field, name)
    if variance == "copresheaf":
        return Copresheaf.from_maps(poset, dims, maps, field, name)
    raise InputError(f"Unknown variance: {variance!r}; expected 'presheaf' or 'copresheaf'")
