from __future__ import annotations
from typing import Dict, Generic, Hashable, List, Tuple, TypeVar
import logging

from errors import PathError
from triangulation.models import AbstractTriangulation, BoundaryPath

logger = logging.getLogger(__name__)

K = TypeVar("K", bound=Hashable)



class UnionFind(Generic[K]):
    def __init__(self) -> None:
        self.__parent:Dict[K, K] = {}


    def add(self, item:K) -> None:
        self.__parent.setdefault(item, item)


    def find(self, item:K) -> K:
        root = item
        while self.__parent[root] != root:
            root = self.__parent[root]
        while self.__parent[item] != root:
            self.__parent[item], item = root, self.__parent[item]

        return root


    def union(self, a:K, b:K) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra: #type: ignore[operator]
                ra, rb = rb, ra
            self.__parent[rb] = ra


    def classes(self) -> Dict[K, List[K]]:
        grouped:Dict[K, List[K]] = {}
        for item in sorted(self.__parent): #type: ignore[type-var]
            grouped.setdefault(self.find(item), []).append(item)

        return grouped


class BoundaryCensus:
    """Truncation triangles at the tetrahedron corners, glued into the boundary surfaces."""

    def __init__(self, triangulation:AbstractTriangulation) -> None:
        self.__triangulation = triangulation
        self.corners:UnionFind[Tuple[int, int]] = UnionFind()
        self.__sides:UnionFind[Tuple[int, int, int]] = UnionFind()
        self.__points:UnionFind[Tuple[int, int, int]] = UnionFind()
        self.__build()


    def __build(self) -> None:
        t = self.__triangulation
        for tet in range(t.tets):
            for v in range(4):
                self.corners.add((tet, v))
                for w in range(4):
                    if w != v:
                        self.__sides.add((tet, v, w)) #side of the corner-v triangle lying in face w
                        self.__points.add((tet, v, w)) #point on edge vw near v

        for (tet, face), gluing in t.gluings.items():
            for v in range(4):
                if v == face:
                    continue
                self.corners.union((tet, v), (gluing.tet, gluing(v)))
                self.__sides.union((tet, v, face), (gluing.tet, gluing(v), gluing.face))
                for w in range(4):
                    if w != v and w != face:
                        self.__points.union((tet, v, w), (gluing.tet, gluing(v), gluing(w)))


    def components(self) -> List[Tuple[int, int]]:
        """(component id, Euler characteristic) per boundary surface, ordered by smallest corner."""
        roots = list(self.corners.classes().keys())
        faces = {root: 0 for root in roots}
        edges = {root: 0 for root in roots}
        vertices = {root: 0 for root in roots}
        for root, members in self.corners.classes().items():
            faces[root] = len(members)
        for root in self.__sides.classes():
            edges[self.corners.find(root[:2])] += 1
        for root in self.__points.classes():
            vertices[self.corners.find(root[:2])] += 1

        census = [(index, vertices[root] - edges[root] + faces[root]) for index, root in enumerate(roots)]
        for index, euler in census:
            if euler != 0:
                logger.warning("boundary component %d has Euler characteristic %d, not a torus", index, euler)

        return census


    def component_of(self, tet:int, vertex:int) -> Tuple[int, int]:
        return self.corners.find((tet, vertex))


    def check_on_one_component(self, path:BoundaryPath) -> None:
        if not path.steps:
            return
        first = path.steps[0]
        component = self.component_of(first.tet, first.ordering[0])
        for index, step in enumerate(path.steps):
            if self.component_of(step.tet, step.ordering[0]) != component:
                raise PathError(index, f"path {path.name!r} leaves the boundary component of its first step")



def boundary_components(triangulation:AbstractTriangulation) -> List[Tuple[int, int]]:
    return BoundaryCensus(triangulation).components()


def torus_cusp_count(census:List[Tuple[int, int]]) -> int:
    return sum(1 for _, euler in census if euler == 0)
