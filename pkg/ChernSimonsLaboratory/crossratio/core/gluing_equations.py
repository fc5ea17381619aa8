from __future__ import annotations
from typing import List, Sequence
import logging
import numpy as np

from triangulation.models import Branching, BoundaryPath, EdgeType
from crossratio.models import DEGENERACY_TOLERANCE, Factor, GluingRelation, GluingSystem, RelationKind, check_shape

from .cross_ratio import cross_ratio_log_derivative, expand_cross_ratio

logger = logging.getLogger(__name__)



def build_gluing_system(branching:Branching, paths:Sequence[BoundaryPath]=()) -> GluingSystem:
    relations:List[GluingRelation] = []
    for edge_class in branching.edge_classes:
        if not edge_class.closed:
            continue
        factors = tuple(Factor(entry.tet, branching.roles(entry.tet, entry.ordering), 1) for entry in edge_class.star)
        relations.append(GluingRelation(f"edge {edge_class.index}", RelationKind.EDGE, factors))

    for path in paths:
        #Squared peripheral eigenvalue: (-1)^#E2 times the inverse cross-ratios at the E3 sources
        e2_count = sum(1 for step in path.steps if step.edge_type == EdgeType.E2)
        factors = tuple(
            Factor(step.tet, branching.roles(step.tet, step.source), -1)
            for step in path.steps
            if step.edge_type == EdgeType.E3
        )
        relations.append(GluingRelation(f"cusp {path.name}", RelationKind.CUSP, factors, -1 if e2_count % 2 else 1))

    if not paths:
        logger.warning("no peripheral paths given, completeness equations are not imposed")

    return GluingSystem(branching.triangulation.tets, tuple(relations))


def relation_value(relation:GluingRelation, shapes:Sequence[complex]) -> complex:
    value = complex(relation.constant)
    for factor in relation.factors:
        value *= expand_cross_ratio(shapes[factor.tet], factor.roles) ** factor.exponent

    return value


def edge_residuals(system:GluingSystem, shapes:Sequence[complex], tolerance:float=DEGENERACY_TOLERANCE) -> np.ndarray:
    for tet, z in enumerate(shapes):
        check_shape(tet, z, tolerance)

    return np.array([relation_value(relation, shapes) - 1 for relation in system.relations], dtype=complex)


def gluing_jacobian(system:GluingSystem, shapes:Sequence[complex]) -> np.ndarray:
    """d r_j / d z_t = (r_j + 1) * sum of exponent * dlog X over the factors on t."""
    jacobian = np.zeros((len(system.relations), system.tets), dtype=complex)
    for j, relation in enumerate(system.relations):
        value = relation_value(relation, shapes)
        for factor in relation.factors:
            jacobian[j, factor.tet] += value * factor.exponent * cross_ratio_log_derivative(shapes[factor.tet], factor.roles)

    return jacobian
