from __future__ import annotations
from dataclasses import dataclass
from sortedcontainers import SortedDict

from triangulation.models import EdgeType, Ordering
from flattening.models import Flattening

from .mat2 import Mat2



@dataclass(frozen=True)
class LiftedCocycle:
    flattening:Flattening
    table:SortedDict #(tet, ordering, edge type position) -> Mat2 for ordering -> neighbour


    def label(self, tet:int, ordering:Ordering, edge_type:EdgeType) -> Mat2:
        return self.table[(tet, ordering, edge_type.position)]
