from __future__ import annotations
from collections import deque
from typing import Dict, List, Optional, Tuple
import logging
import numpy as np

from triangulation.models import EdgeType, Ordering, swap
from holonomy.models import IDENTITY, FundamentalRepresentation, LiftedCocycle, Mat2, inverse, projective_deviation

from .cocycle_builder import ORDERINGS

logger = logging.getLogger(__name__)

BASE_ORDERING:Ordering = (0, 1, 2, 3)



class FundamentalGroupBuilder:
    """
    Holonomy of the dual graph loops: a spanning tree of tetrahedra from the base, transport
    matrices inside each tetrahedron, and one generator per gluing outside the tree.
    """

    def __init__(self, cocycle:LiftedCocycle, base_tet:int=0) -> None:
        self.__cocycle = cocycle
        self.__triangulation = cocycle.flattening.triangulation
        self.__base_tet = base_tet
        self.__transport:Dict[Tuple[int, Ordering], Mat2] = {}
        self.__tree_matrix:Dict[int, Mat2] = {}
        self.__tree:List[Tuple[int, int]] = []


    def transport(self, tet:int, ordering:Ordering) -> Mat2:
        """Holonomy inside `tet` from the base ordering 0123 to `ordering`."""
        if (tet, BASE_ORDERING) not in self.__transport:
            self.__transport[(tet, BASE_ORDERING)] = IDENTITY.copy()
            queue = deque([BASE_ORDERING])
            while queue:
                current = queue.popleft()
                for edge_type in EdgeType:
                    neighbour = swap(current, edge_type)
                    if (tet, neighbour) not in self.__transport:
                        label = self.__cocycle.label(tet, current, edge_type)
                        self.__transport[(tet, neighbour)] = label @ self.__transport[(tet, current)]
                        queue.append(neighbour)
            assert all((tet, o) in self.__transport for o in ORDERINGS)

        return self.__transport[(tet, ordering)]


    def gluing_matrix(self, tet:int, face:int) -> Optional[Mat2]:
        gluing = self.__triangulation.glued(tet, face)
        if gluing is None or tet not in self.__tree_matrix or gluing.tet not in self.__tree_matrix:
            return None

        ordering = next(o for o in ORDERINGS if o[3] == face)
        partner = self.__triangulation.across_last(tet, ordering)
        assert partner is not None
        other_tet, other_ordering = partner

        return (
            inverse(self.__tree_matrix[other_tet])
            @ inverse(self.transport(other_tet, other_ordering))
            @ self.transport(tet, ordering)
            @ self.__tree_matrix[tet]
        )


    def build(self) -> FundamentalRepresentation:
        t = self.__triangulation
        if t.tets == 0:
            return FundamentalRepresentation(self.__base_tet, (), {}, ())

        self.__tree_matrix[self.__base_tet] = IDENTITY.copy()
        queue = deque([self.__base_tet])
        tree_pairs = set()
        while queue:
            tet = queue.popleft()
            for face in range(4):
                gluing = t.glued(tet, face)
                if gluing is None or gluing.tet in self.__tree_matrix:
                    continue
                ordering = next(o for o in ORDERINGS if o[3] == face)
                partner = t.across_last(tet, ordering)
                assert partner is not None
                self.__tree_matrix[gluing.tet] = (
                    inverse(self.transport(gluing.tet, partner[1]))
                    @ self.transport(tet, ordering)
                    @ self.__tree_matrix[tet]
                )
                self.__tree.append((tet, face))
                tree_pairs.add(frozenset({(tet, face), (gluing.tet, gluing.face)}))
                queue.append(gluing.tet)

        generators:Dict[Tuple[int, int], Mat2] = {}
        for tet, face, gluing in t.face_pairs:
            if frozenset({(tet, face), (gluing.tet, gluing.face)}) in tree_pairs:
                continue
            matrix = self.gluing_matrix(tet, face)
            if matrix is not None:
                generators[(tet, face)] = matrix

        residuals = tuple(self.__edge_relation(index) for index in range(len(self.__cocycle.flattening.branching.edge_classes)))
        residuals = tuple(r for r in residuals if r is not None)
        logger.info("fundamental group representation with %d generator(s)", len(generators))

        return FundamentalRepresentation(self.__base_tet, tuple(self.__tree), generators, residuals) #type: ignore[arg-type]


    def __edge_relation(self, index:int) -> Optional[float]:
        edge_class = self.__cocycle.flattening.branching.edge_classes[index]
        if not edge_class.closed:
            return None

        product = IDENTITY.copy()
        for entry in edge_class.star:
            matrix = self.gluing_matrix(entry.tet, entry.left)
            if matrix is None:
                return None
            product = matrix @ product

        return projective_deviation(np.asarray(product))



def fundamental_representation(cocycle:LiftedCocycle, base_tet:int=0) -> FundamentalRepresentation:
    return FundamentalGroupBuilder(cocycle, base_tet).build()
