from __future__ import annotations
from itertools import permutations
from sortedcontainers import SortedDict
import logging

from triangulation.models import EdgeType, Ordering, swap
from flattening.models import Flattening
from holonomy.models import M1, M2, M3, LiftedCocycle, Mat2

logger = logging.getLogger(__name__)

ORDERINGS = tuple(permutations(range(4)))



def edge_label(flattening:Flattening, tet:int, ordering:Ordering, edge_type:EdgeType) -> Mat2:
    if edge_type == EdgeType.E3:
        return M3(flattening.value(tet, ordering))

    branching = flattening.branching
    forward = branching.roles(tet, ordering) < branching.roles(tet, swap(ordering, edge_type))
    matrix = M1 if edge_type == EdgeType.E1 else M2

    return matrix if forward else -matrix


def build_lifted_cocycle(flattening:Flattening) -> LiftedCocycle:
    table = SortedDict()
    for tet in range(len(flattening.tets)):
        for ordering in ORDERINGS:
            for edge_type in EdgeType:
                table[(tet, ordering, edge_type.position)] = edge_label(flattening, tet, ordering, edge_type)

    logger.debug("lifted cocycle with %d labels", len(table))

    return LiftedCocycle(flattening, table)
