"""
Comparison of the Čech complex of a cover with the nerve complex of its intersection poset.

Both complexes are the full (repeats allowed) ones. Operators are built on formal chains
and dualized: a chain operator sending u to a combination of cells t with U_t ⊇ U_u
becomes the cochain operator c -> sum of coeff * c(t) restricted to U_u.
"""

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from ..cech import CochainComplex, Cover, GradedMap, SectionCache, cech_complex, chain_map_violations
from ..linalg import Matrix, MatrixBuilder
from ..presheaf import PosetFunctor
from ..utils.errors import CheckFailure, InputError
from ..utils.logging import get_logger
from .chains import Chain
from .complex import local_system_complex
from .covering import IntersectionPoset, intersection_poset, projection

logger = get_logger(__name__)

FormalChain = Dict[Chain, int]


def permutation_sign(perm: Tuple[int, ...]) -> int:
    inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
    return -1 if inversions % 2 else 1


def _add(target: FormalChain, chain: Chain, coeff: int) -> None:
    value = target.get(chain, 0) + coeff
    if value:
        target[chain] = value
    else:
        target.pop(chain, None)


def _cone(chains: FormalChain, apex: int, degree: int) -> FormalChain:
    """cone'(w) = (-1)^{m+1} (w, apex) for an m-chain w, so that d cone'(w) = w - cone'(dw)."""
    sign = -1 if (degree + 1) % 2 else 1
    return {chain + (apex,): sign * coeff for chain, coeff in chains.items()}


@dataclass
class HomotopyCheck:
    degree: int
    sd_pi: bool
    pi_sd: bool

    def to_json(self) -> dict:
        return {"degree": self.degree, "id_minus_sd_pi": self.sd_pi, "id_minus_pi_sd": self.pi_sd}


@dataclass
class HomotopyReport:
    checks: List[HomotopyCheck] = field(default_factory=list)
    chain_maps: Dict[str, bool] = field(default_factory=dict)
    cech_dims: List[int] = field(default_factory=list)
    nerve_dims: List[int] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return all(c.sd_pi and c.pi_sd for c in self.checks) and all(self.chain_maps.values())

    def to_json(self) -> dict:
        return {
            "verified": self.verified,
            "degrees": [c.to_json() for c in self.checks],
            "chain_maps": self.chain_maps,
            "cech_cochain_dims": self.cech_dims,
            "nerve_cochain_dims": self.nerve_dims,
        }


class SubdivisionComparison:
    """
    pi^*: C(K) -> C(N), Sd: C(N) -> C(K) and the homotopies D_K, D_N with
    Id - Sd pi^* = delta D_K + D_K delta and Id - pi^* Sd = delta D_N + D_N delta.
    """

    def __init__(self, cover: Cover, functor: PosetFunctor, max_degree: int = 3):
        if cover.tag != functor.topology:
            raise InputError(f"A {functor.variance} needs a {functor.topology} cover, got a {cover.tag} cover")
        self.cover = cover
        self.functor = functor
        self.max_degree = max_degree
        self.cache = SectionCache(functor)
        self.cech: CochainComplex = cech_complex(cover, functor, max_degree, "full", self.cache)
        self.ip: IntersectionPoset = intersection_poset(cover)
        self.nerve: CochainComplex = local_system_complex(
            self.ip.local_system(self.cache), max_degree, "full", name="nerve-of-cover"
        )
        self.pi: List[int] = projection(self.ip)
        self.member_cell = [self.ip.cell_index(m) for m in cover.members]
        self._d_k: Dict[Chain, FormalChain] = {}
        self._d_n: Dict[Chain, FormalChain] = {}

    # Chain-level operators

    def _cell_of(self, u: Chain) -> int:
        return self.ip.cell_index(self.cover.intersection(u))

    def pi_chain(self, v: Chain) -> Chain:
        """pi_#(V_0, ..., V_n) = (pi V_0, ..., pi V_n) as member indices."""
        return tuple(self.pi[c] for c in v)

    def sd_chain(self, u: Chain) -> FormalChain:
        """Sd_#(u) = sum of sign(s) (U_s0, U_s0 ∩ U_s1, ..., U_u) over permutations s."""
        result: FormalChain = {}
        for perm in itertools.permutations(range(len(u))):
            flag = tuple(self._cell_of(tuple(u[perm[j]] for j in range(k + 1))) for k in range(len(u)))
            _add(result, flag, permutation_sign(perm))
        return result

    def d_k_chain(self, u: Chain) -> FormalChain:
        """D_K(u) = cone'_{pi(U_u)}(u - D_K(du)), zero on vertices."""
        if u not in self._d_k:
            n = len(u) - 1
            if n == 0:
                self._d_k[u] = {}
            else:
                z: FormalChain = {u: 1}
                for i in range(n + 1):
                    for chain, coeff in self.d_k_chain(u[:i] + u[i + 1:]).items():
                        _add(z, chain, -coeff if i % 2 == 0 else coeff)
                self._d_k[u] = _cone(z, self.pi[self._cell_of(u)], n)
        return self._d_k[u]

    def d_n_chain(self, v: Chain) -> FormalChain:
        """D_N(V_0) = (pi V_0, V_0); D_N(v) = cone'_{V_n}(v - Sd_# pi_# v - D_N(dv))."""
        if v not in self._d_n:
            n = len(v) - 1
            if n == 0:
                self._d_n[v] = {(self.member_cell[self.pi[v[0]]], v[0]): 1}
            else:
                z: FormalChain = {v: 1}
                for chain, coeff in self.sd_chain(self.pi_chain(v)).items():
                    _add(z, chain, -coeff)
                for i in range(n + 1):
                    for chain, coeff in self.d_n_chain(v[:i] + v[i + 1:]).items():
                        _add(z, chain, -coeff if i % 2 == 0 else coeff)
                self._d_n[v] = _cone(z, v[-1], n)
        return self._d_n[v]

    # Cochain-level matrices

    def pi_star(self) -> GradedMap:
        """(pi^* c)(v) = c(pi_# v) restricted from U_{pi v} to V_n."""
        result = GradedMap("pi_star", 0)
        for n in range(self.max_degree + 1):
            builder = MatrixBuilder(self.nerve.dim(n), self.cech.dim(n), self.functor.field)
            for target in self.nerve.summands[n]:
                image = self.pi_chain(target.key)
                source = self.cech.summand(n, image)
                if not target.dim or source is None or not source.dim:
                    continue
                block = self.cache.restriction(self.cover.intersection(image), self.ip.cells[target.key[-1]])
                builder.add_block(target.offset, source.offset, block)
            result.blocks[n] = builder.build()
        return result

    def subdivision(self) -> GradedMap:
        """(Sd c)(u) = c(Sd_# u); every flag ends at U_u, so the blocks are identities."""
        result = GradedMap("subdivision", 0)
        for n in range(self.max_degree + 1):
            builder = MatrixBuilder(self.cech.dim(n), self.nerve.dim(n), self.functor.field)
            for target in self.cech.summands[n]:
                if not target.dim:
                    continue
                for flag, coeff in self.sd_chain(target.key).items():
                    source = self.nerve.summand(n, flag)
                    builder.add_identity(target.offset, source.offset, target.dim, coeff)
            result.blocks[n] = builder.build()
        return result

    def _dualize(self, complex_: CochainComplex, operator, support_of, name: str) -> GradedMap:
        result = GradedMap(name, -1)
        for n in range(self.max_degree):
            builder = MatrixBuilder(complex_.dim(n), complex_.dim(n + 1), self.functor.field)
            for target in complex_.summands[n]:
                if not target.dim:
                    continue
                for chain, coeff in operator(target.key).items():
                    source = complex_.summand(n + 1, chain)
                    if source is None:
                        raise CheckFailure(f"{name} leaves the complex", {"degree": n, "chain": list(chain)})
                    if not source.dim:
                        continue
                    block = self.cache.restriction(support_of(chain), support_of(target.key))
                    builder.add_block(target.offset, source.offset, block, coeff)
            result.blocks[n] = builder.build()
        return result

    def homotopies(self) -> Tuple[GradedMap, GradedMap]:
        """D_K and D_N; block n maps degree n + 1 to degree n."""
        d_k = self._dualize(self.cech, self.d_k_chain, self.cover.intersection, "D_K")
        d_n = self._dualize(self.nerve, self.d_n_chain, lambda v: self.ip.cells[v[-1]], "D_N")
        return d_k, d_n

    @staticmethod
    def _homotopy_defect(complex_: CochainComplex, lhs: Matrix, d: GradedMap, n: int):
        rhs = d[n] @ complex_.delta(n)
        if n > 0:
            rhs = rhs + complex_.delta(n - 1) @ d[n - 1]
        return None if lhs == rhs else lhs.first_difference(rhs)

    def verify(self, raise_on_failure: bool = True) -> HomotopyReport:
        """
        Check both homotopy identities for degrees 0..max_degree-1 and that pi^*, Sd are
        chain maps.

        Raises:
            CheckFailure: With the identity, degree and first differing entry
        """
        pi_star, sd = self.pi_star(), self.subdivision()
        d_k, d_n = self.homotopies()
        report = HomotopyReport(cech_dims=self.cech.dims(), nerve_dims=self.nerve.dims())
        report.chain_maps["pi_star"] = not chain_map_violations(pi_star, self.cech, self.nerve)
        report.chain_maps["subdivision"] = not chain_map_violations(sd, self.nerve, self.cech)
        field_ = self.functor.field
        first_failure = None
        for n in range(self.max_degree):
            k_lhs = Matrix.identity(self.cech.dim(n), field_) - sd[n] @ pi_star[n]
            n_lhs = Matrix.identity(self.nerve.dim(n), field_) - pi_star[n] @ sd[n]
            k_defect = self._homotopy_defect(self.cech, k_lhs, d_k, n)
            n_defect = self._homotopy_defect(self.nerve, n_lhs, d_n, n)
            report.checks.append(HomotopyCheck(n, k_defect is None, n_defect is None))
            if first_failure is None and k_defect is not None:
                first_failure = {"identity": "Id - Sd pi*", "degree": n, "entry": list(k_defect)}
            if first_failure is None and n_defect is not None:
                first_failure = {"identity": "Id - pi* Sd", "degree": n, "entry": list(n_defect)}
        if first_failure is None and not report.verified:
            bad = next(k for k, ok in report.chain_maps.items() if not ok)
            first_failure = {"chain_map": bad}
        if first_failure is not None:
            logger.error(f"Homotopy verification failed: {first_failure}")
            if raise_on_failure:
                raise CheckFailure("Homotopy identity fails", first_failure)
        else:
            logger.info(f"Homotopy identities hold up to degree {self.max_degree - 1}")
        return report


def pi_star(cover: Cover, functor: PosetFunctor, max_degree: int = 3) -> GradedMap:
    return SubdivisionComparison(cover, functor, max_degree).pi_star()


def subdivision_sd(cover: Cover, functor: PosetFunctor, max_degree: int = 3) -> GradedMap:
    return SubdivisionComparison(cover, functor, max_degree).subdivision()


def homotopies_dk_dn(cover: Cover, functor: PosetFunctor, max_degree: int = 3) -> Dict[str, GradedMap]:
    d_k, d_n = SubdivisionComparison(cover, functor, max_degree).homotopies()
    return {"D_K": d_k, "D_N": d_n}


def verify_homotopy(cover: Cover, functor: PosetFunctor, max_degree: int = 3) -> HomotopyReport:
    return SubdivisionComparison(cover, functor, max_degree).verify()
