from __future__ import annotations
from typing import Tuple

from errors import PathError
from triangulation.models import AbstractTriangulation, BoundaryPath, EdgeType, Ordering

from .boundary_census import BoundaryCensus



def same_vertex(triangulation:AbstractTriangulation, a:Tuple[int, Ordering], b:Tuple[int, Ordering]) -> bool:
    """Vertices of P(T) agree, directly or through the gluing of the face opposite the last label."""
    if a == b:
        return True

    return triangulation.across_last(a[0], a[1]) == b


def check_path(triangulation:AbstractTriangulation, path:BoundaryPath, closed:bool=True) -> None:
    for index, step in enumerate(path.steps):
        if step.edge_type == EdgeType.E1:
            raise PathError(index, f"path {path.name!r} leaves the boundary through an E1 edge")
        if not 0 <= step.tet < triangulation.tets:
            raise PathError(index, f"tetrahedron {step.tet} does not exist")
        if index > 0:
            previous = path.steps[index - 1]
            if not same_vertex(triangulation, (previous.tet, previous.target), (step.tet, step.source)):
                raise PathError(index, f"path {path.name!r} is disconnected")

    if closed and path.steps:
        last, first = path.steps[-1], path.steps[0]
        if not same_vertex(triangulation, (last.tet, last.target), (first.tet, first.source)):
            raise PathError(len(path.steps) - 1, f"path {path.name!r} is not closed")

    BoundaryCensus(triangulation).check_on_one_component(path)
