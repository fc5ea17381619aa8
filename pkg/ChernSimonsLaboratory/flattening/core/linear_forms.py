from __future__ import annotations
from typing import List
import numpy as np
import sympy

from triangulation.models import Branching, BoundaryPath, EdgeClass, EdgeType, Ordering, classify
from flattening.models import Flattening, LinearForm

_HALF = sympy.Rational(1, 2)



def role_form(tets:int, tet:int, roles:Ordering) -> LinearForm:
    """L(roles) on tetrahedron `tet` as a linear form in (l1, l2) and i*pi."""
    ordering_class, sign = classify(roles)
    c1, c2, constant = ((1, 0, 0), (0, 1, 0), (-1, -1, 1))[ordering_class.shape_index]

    return LinearForm.ZERO(tets).add_term(tet, sign * c1, sign * c2, sign * (constant + ordering_class.offset))


def ordering_form(branching:Branching, tet:int, ordering:Ordering) -> LinearForm:
    return role_form(len(branching.orders), tet, branching.roles(tet, ordering))


def edge_flattening_form(branching:Branching, edge_class:EdgeClass) -> LinearForm:
    form = LinearForm.ZERO(len(branching.orders))
    for entry in edge_class.star:
        form = form + ordering_form(branching, entry.tet, entry.ordering)

    return form


def path_form(branching:Branching, path:BoundaryPath) -> LinearForm:
    """Log-holonomy of a boundary path: -L(source)/2 per E3 step, -/+ i*pi/2 per E2 step forward/backward."""
    form = LinearForm.ZERO(len(branching.orders))
    for step in path.steps:
        if step.edge_type == EdgeType.E3:
            form = form + ordering_form(branching, step.tet, step.source).scale(-_HALF)
        else:
            forward = branching.roles(step.tet, step.source) < branching.roles(step.tet, step.target)
            form = form + LinearForm(LinearForm.ZERO(len(branching.orders)).coefficients, -_HALF if forward else _HALF)

    return form


def closed_edge_forms(branching:Branching) -> List[LinearForm]:
    return [edge_flattening_form(branching, edge_class) for edge_class in branching.edge_classes if edge_class.closed]


def edge_flattening_residuals(flattening:Flattening) -> np.ndarray:
    """Sum of L(tail head left right) around every closed edge class; zero for a flattening."""
    forms = closed_edge_forms(flattening.branching)
    return np.array([form.evaluate(flattening.tets) for form in forms], dtype=complex)
