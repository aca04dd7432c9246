"""Functors generated by a hypergraph: free, reduced, free copresheaf and restricted copresheaf."""

from typing import Dict

from ..linalg import FieldSpec, Matrix
from ..poset import Hypergraph, mobius
from ..utils.logging import get_logger
from .functor import Copresheaf, InjectivePresheaf, poset_strict_arrows

logger = get_logger(__name__)


def _pullback_matrix(h: Hypergraph, i: int, j: int, field: FieldSpec) -> Matrix:
    """0/1 matrix of the pullback along the projection E_alpha -> E_beta."""
    alpha, beta = h.faces[i], h.faces[j]
    rows = {}
    for x_index, x in enumerate(h.configurations(alpha)):
        y = h.project(x, alpha, beta)
        rows[x_index] = {h.configuration_index(y, beta): field.one}
    return Matrix(h.n_configurations(alpha), h.n_configurations(beta), field, rows)


def free_presheaf(h: Hypergraph, field: FieldSpec) -> InjectivePresheaf:
    """
    V_alpha = functions on E_alpha, basis indexed by configurations in lexicographic order.

    Column y of j_{alpha beta} is the indicator of the configurations of alpha that
    restrict to y.
    """
    poset = h.poset()
    dims = [h.n_configurations(f) for f in h.faces]
    maps = {(i, j): _pullback_matrix(h, i, j, field) for i, j in poset_strict_arrows(poset)}
    logger.debug(f"Free presheaf dims {dims}")
    return InjectivePresheaf(poset, dims, maps, field, name="free")


def _reduced_matrix(h: Hypergraph, i: int, j: int, field: FieldSpec) -> Matrix:
    """
    Pullback written in the difference bases delta_x - delta_x0.

    Entry (x, y) is [x|beta = y] - [x|beta = y0] for x != x0 and y != y0, where x0 and
    y0 are the all-zero configurations.
    """
    alpha, beta = h.faces[i], h.faces[j]
    n_beta = h.n_configurations(beta)
    minus_one = field.coerce(-1)
    rows = {}
    for x_index, x in enumerate(h.configurations(alpha)):
        if x_index == 0:
            continue
        y_index = h.configuration_index(h.project(x, alpha, beta), beta)
        if y_index:
            rows[x_index - 1] = {y_index - 1: field.one}
        else:
            rows[x_index - 1] = {col: minus_one for col in range(n_beta - 1)}
    return Matrix(h.n_configurations(alpha) - 1, n_beta - 1, field, rows)


def reduced_presheaf(h: Hypergraph, field: FieldSpec) -> InjectivePresheaf:
    """
    The free presheaf modulo constants, realized as its sum-zero subfunctor.

    Pullbacks preserve sum-zero functions because every fibre of E_alpha -> E_beta has
    N_{alpha minus beta} elements. The two models are isomorphic when the characteristic
    does not divide N_alpha.
    """
    poset = h.poset()
    dims = [h.n_configurations(f) - 1 for f in h.faces]
    maps = {(i, j): _reduced_matrix(h, i, j, field) for i, j in poset_strict_arrows(poset)}
    return InjectivePresheaf(poset, dims, maps, field, name="reduced")


def free_copresheaf(h: Hypergraph, field: FieldSpec) -> Copresheaf:
    """F_alpha = functions on E_alpha with marginalization; pi^{beta alpha} = j_{alpha beta}^T."""
    poset = h.poset()
    dims = [h.n_configurations(f) for f in h.faces]
    maps = {(i, j): _pullback_matrix(h, i, j, field).transpose() for i, j in poset_strict_arrows(poset)}
    return Copresheaf(poset, dims, maps, field, name="free_copresheaf")


def _restricted_matrix(h: Hypergraph, i: int, j: int, field: FieldSpec) -> Matrix:
    """Marginalization of delta_x - delta_x0 is delta_{x|beta} - delta_y0."""
    alpha, beta = h.faces[i], h.faces[j]
    data: Dict[int, Dict[int, object]] = {}
    for x_index, x in enumerate(h.configurations(alpha)):
        if x_index == 0:
            continue
        y_index = h.configuration_index(h.project(x, alpha, beta), beta)
        if y_index:
            data.setdefault(y_index - 1, {})[x_index - 1] = field.one
    return Matrix(h.n_configurations(beta) - 1, h.n_configurations(alpha) - 1, field, data)


def restricted_copresheaf(h: Hypergraph, field: FieldSpec) -> Copresheaf:
    """Sum-zero functions on E_alpha with the induced marginalization maps."""
    poset = h.poset()
    dims = [h.n_configurations(f) - 1 for f in h.faces]
    maps = {(i, j): _restricted_matrix(h, i, j, field) for i, j in poset_strict_arrows(poset)}
    return Copresheaf(poset, dims, maps, field, name="restricted")


def interaction_dims_via_mobius(h: Hypergraph) -> Dict[str, int]:
    """D_alpha = sum of mu(alpha, beta) N_beta over alpha -> beta."""
    table = mobius(h.poset())
    sizes = [h.n_configurations(f) for f in h.faces]
    return {
        label: sum(table.mu_idx(i, j) * sizes[j] for j in range(len(h.faces)))
        for i, label in enumerate(h.labels)
    }


def restricted_index(h: Hypergraph) -> int:
    """Sum of mu(alpha, beta) (N_beta - 1) over all pairs."""
    table = mobius(h.poset())
    sizes = [h.n_configurations(f) for f in h.faces]
    return sum(v * (sizes[j] - 1) for (_, j), v in table.values.items())
