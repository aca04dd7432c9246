"""Nerve cochain complexes with coefficients in a local system of section spaces."""

from dataclasses import dataclass
from typing import Callable, List, Sequence

from ..cech import CochainComplex, Summand
from ..linalg import FieldSpec, Matrix, MatrixBuilder
from ..poset import Poset
from ..presheaf import PosetFunctor
from ..utils.errors import InputError
from ..utils.logging import get_logger
from .chains import Chain, enumerate_chains

logger = get_logger(__name__)


@dataclass
class LocalSystem:
    """
    Cells ordered by containment with a coefficient space per cell.

    contains(a, b) means the open of b lies in the open of a; restriction(a, b) maps the
    space of a to the space of b.
    """

    labels: Sequence[str]
    contains: Callable[[int, int], bool]
    dim: Callable[[int], int]
    restriction: Callable[[int, int], Matrix]
    field: FieldSpec

    def __len__(self) -> int:
        return len(self.labels)


def functor_system(functor: PosetFunctor) -> LocalSystem:
    """Cells are the poset elements; b lies in a when b is in the basis open of a."""
    return LocalSystem(
        labels=functor.poset.elements,
        contains=lambda a, b: b in functor.basis_open(a),
        dim=lambda a: functor.dims[a],
        restriction=functor.restriction,
        field=functor.field,
    )


def local_system_complex(system: LocalSystem, max_degree: int, mode: str, name: str = "nerve") -> CochainComplex:
    """
    C^n = sum over chains c_0 ⊇ ... ⊇ c_n of the space of c_n, and
    delta(c)(u) = sum of (-1)^i c(d_i u), the last face restricted from u_n to u_{n+1}.
    """
    if max_degree < 1:
        raise InputError("max_degree must be at least 1")
    levels = enumerate_chains(len(system), system.contains, max_degree, mode)
    summands: List[List[Summand]] = []
    for level in levels:
        row, offset = [], 0
        for chain in level:
            d = system.dim(chain[-1])
            row.append(Summand(chain, tuple(system.labels[k] for k in chain), d, offset))
            offset += d
        summands.append(row)

    deltas = []
    for n in range(max_degree):
        index = {s.key: s for s in summands[n]}
        builder = MatrixBuilder(sum(s.dim for s in summands[n + 1]), sum(s.dim for s in summands[n]), system.field)
        for target in summands[n + 1]:
            if not target.dim:
                continue
            u: Chain = target.key
            for i in range(n + 1):
                source = index[u[:i] + u[i + 1:]]
                if source.dim:
                    builder.add_identity(target.offset, source.offset, target.dim, -1 if i % 2 else 1)
            source = index[u[:-1]]
            if source.dim:
                block = system.restriction(u[-2], u[-1])
                builder.add_block(target.offset, source.offset, block, -1 if (n + 1) % 2 else 1)
        deltas.append(builder.build())
    return CochainComplex(system.field, summands, deltas, name=name)


def nerve_complex(p: Poset, functor: PosetFunctor, system: str, max_degree: int,
                  mode: str = "nondegenerate") -> CochainComplex:
    """
    Nerve complex of a poset with coefficients in a functor.

    The upper system pairs with presheaves (chains a_n -> ... -> a_0, value at a_n); the
    lower system pairs with copresheaves (chains a_0 -> ... -> a_n, value at a_n).

    Raises:
        InputError: On a variance mismatch or a functor on another poset
    """
    if system != functor.topology:
        raise InputError(
            f"The {system} system needs a {'presheaf' if system == 'upper' else 'copresheaf'}, "
            f"got a {functor.variance}"
        )
    if functor.poset != p:
        raise InputError("The functor is defined on a different poset")
    complex_ = local_system_complex(functor_system(functor), max_degree, mode, name=f"nerve-{system}-{mode}")
    logger.info(f"Built {mode} nerve complex ({system}): cochain dims {complex_.dims()}")
    return complex_
