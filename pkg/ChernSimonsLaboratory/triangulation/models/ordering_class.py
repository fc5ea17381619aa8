from __future__ import annotations
from typing import Dict, Tuple
from enum import Enum, auto

Ordering = Tuple[int, int, int, int]



class EdgeType(Enum):
    E1 = auto()
    E2 = auto()
    E3 = auto()


    @property
    def position(self) -> int:
        #Index of the first of the two swapped slots
        return {EdgeType.E1: 0, EdgeType.E2: 1, EdgeType.E3: 2}[self]


class OrderingClass(Enum):
    A = auto()
    A_PRIME = auto()
    B = auto()
    B_PRIME = auto()
    C = auto()
    C_PRIME = auto()


    @property
    def shape_index(self) -> int:
        #0 -> z, 1 -> 1/(1-z), 2 -> 1-1/z
        if self in (OrderingClass.A, OrderingClass.A_PRIME):
            return 0
        if self in (OrderingClass.B, OrderingClass.B_PRIME):
            return 1
        return 2


    @property
    def offset(self) -> int:
        #Offset of the flattening value in units of i*pi
        return -2 if self == OrderingClass.B_PRIME else 0


    @property
    def representative(self) -> Ordering:
        return _REPRESENTATIVES[self]


_REPRESENTATIVES:Dict[OrderingClass, Ordering] = {
    OrderingClass.A: (0, 1, 2, 3),       #xyzt
    OrderingClass.A_PRIME: (2, 3, 0, 1), #ztxy
    OrderingClass.B: (0, 2, 3, 1),       #xzty
    OrderingClass.B_PRIME: (3, 1, 0, 2), #tyxz
    OrderingClass.C: (0, 3, 1, 2),       #xtyz
    OrderingClass.C_PRIME: (1, 2, 0, 3), #yzxt
}



def swap(ordering:Ordering, edge_type:EdgeType) -> Ordering:
    i = edge_type.position
    swapped = list(ordering)
    swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]

    return (swapped[0], swapped[1], swapped[2], swapped[3])


def __build_table() -> Dict[Ordering, Tuple[OrderingClass, int]]:
    table:Dict[Ordering, Tuple[OrderingClass, int]] = {}
    for ordering_class, representative in _REPRESENTATIVES.items():
        first = swap(representative, EdgeType.E1)
        table[representative] = (ordering_class, 1)
        table[first] = (ordering_class, -1)
        table[swap(representative, EdgeType.E3)] = (ordering_class, -1)
        table[swap(first, EdgeType.E3)] = (ordering_class, 1)

    assert len(table) == 24

    return table


ORDERING_TABLE:Dict[Ordering, Tuple[OrderingClass, int]] = __build_table()



def classify(roles:Ordering) -> Tuple[OrderingClass, int]:
    """Coset and sign of a role ordering (roles are branching ranks, x<y<z<t = 0<1<2<3)."""
    return ORDERING_TABLE[roles]


def permutation_parity(perm:Tuple[int, ...]) -> int:
    inversions = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )

    return inversions % 2
