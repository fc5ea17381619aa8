from __future__ import annotations
from typing import Sequence
import numpy as np

from errors import PathError
from triangulation.core import same_vertex
from triangulation.models import PathStep
from holonomy.models import IDENTITY, LiftedCocycle, Mat2



def step_label(cocycle:LiftedCocycle, step:PathStep) -> Mat2:
    return cocycle.label(step.tet, step.source, step.edge_type)


def path_holonomy(cocycle:LiftedCocycle, steps:Sequence[PathStep]) -> Mat2:
    """Ordered product of the step labels, later steps multiplied on the left."""
    triangulation = cocycle.flattening.triangulation
    product = IDENTITY.copy()
    for index, step in enumerate(steps):
        if index > 0:
            previous = steps[index - 1]
            if not same_vertex(triangulation, (previous.tet, previous.target), (step.tet, step.source)):
                raise PathError(index, "consecutive steps do not share a vertex")
        product = step_label(cocycle, step) @ product

    return np.asarray(product)
