"""Independent brute-force count of compatible families of functions on configurations."""

import itertools
from typing import Dict, List, Optional, Tuple

from ..config.constants import ORACLE_CONFIGURATION_BOUND
from ..linalg import FieldSpec, Matrix
from ..poset import Hypergraph
from ..utils.errors import InputError
from ..utils.logging import get_logger

logger = get_logger(__name__)


def _unknowns(h: Hypergraph) -> Tuple[Dict[Tuple[int, Tuple[int, ...]], int], List[List[Tuple[int, ...]]]]:
    index, configs = {}, []
    for k, face in enumerate(h.faces):
        face_configs = list(itertools.product(*(range(h.cardinalities[v]) for v in face)))
        configs.append(face_configs)
        for x in face_configs:
            index[(k, x)] = len(index)
    return index, configs


def brute_force_h0(h: Hypergraph, restricted: bool, field: Optional[FieldSpec] = None,
                   bound: int = ORACLE_CONFIGURATION_BOUND) -> int:
    """
    Solution-space dimension of the raw marginal system.

    One unknown f_alpha(x) per face and configuration; for every pair of faces with
    beta a proper subset of alpha and every x_beta the row
    sum of f_alpha over the fibre of x_beta minus f_beta(x_beta). With `restricted`
    each face also gets the row sum_x f_alpha(x) = 0.

    Raises:
        InputError: If the number of unknowns exceeds `bound`
    """
    field = field or FieldSpec.rationals()
    total = sum(h.n_configurations(f) for f in h.faces)
    if total > bound:
        raise InputError(f"Oracle needs {total} unknowns, more than the bound {bound}")

    index, configs = _unknowns(h)
    sets = [frozenset(f) for f in h.faces]
    minus_one = field.coerce(-1)
    rows: List[Dict[int, object]] = []
    for a, alpha in enumerate(h.faces):
        for b, beta in enumerate(h.faces):
            if a == b or not sets[b] < sets[a]:
                continue
            keep = [alpha.index(v) for v in beta]
            fibres: Dict[Tuple[int, ...], Dict[int, object]] = {
                y: {index[(b, y)]: minus_one} for y in configs[b]
            }
            for x in configs[a]:
                fibres[tuple(x[k] for k in keep)][index[(a, x)]] = field.one
            rows.extend(fibres.values())
        if restricted:
            rows.append({index[(a, x)]: field.one for x in configs[a]})

    rank = Matrix.from_row_vectors(rows, total, field).rank() if rows else 0
    dim = total - rank
    logger.debug(f"Oracle: {total} unknowns, {len(rows)} equations, dimension {dim}")
    return dim
