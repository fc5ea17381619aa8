from __future__ import annotations
from typing import Tuple
from dataclasses import dataclass

from .abstract_triangulation import AbstractTriangulation
from .edge_class import EdgeClass
from .ordering_class import Ordering, permutation_parity



@dataclass(frozen=True)
class Branching:
    triangulation:AbstractTriangulation
    edge_classes:Tuple[EdgeClass, ...]
    directions:Tuple[bool, ...] #per edge class, True = stored tail -> head of the seed
    orders:Tuple[Tuple[int, int, int, int], ...] #per tet, labels from smallest to largest


    def rank(self, tet:int, label:int) -> int:
        return self.orders[tet].index(label)


    def roles(self, tet:int, ordering:Ordering) -> Ordering:
        order = self.orders[tet]
        return (order.index(ordering[0]), order.index(ordering[1]), order.index(ordering[2]), order.index(ordering[3]))


    def labels(self, tet:int, roles:Ordering) -> Ordering:
        order = self.orders[tet]
        return (order[roles[0]], order[roles[1]], order[roles[2]], order[roles[3]])


    def orientation_sign(self, tet:int) -> int:
        return 1 if permutation_parity(self.orders[tet]) == 0 else -1


    @property
    def signs(self) -> Tuple[int, ...]:
        return tuple(self.orientation_sign(tet) for tet in range(len(self.orders)))
