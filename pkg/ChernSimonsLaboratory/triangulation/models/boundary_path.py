from __future__ import annotations
from typing import Tuple
from dataclasses import dataclass

from .ordering_class import EdgeType, Ordering, swap



@dataclass(frozen=True)
class PathStep:
    tet:int
    ordering:Ordering #labels
    edge_type:EdgeType
    direction:int #+1 from ordering to its neighbour, -1 back


    def __post_init__(self) -> None:
        assert self.direction in (1, -1)
        assert sorted(self.ordering) == [0, 1, 2, 3]


    @property
    def neighbour(self) -> Ordering:
        return swap(self.ordering, self.edge_type)


    @property
    def source(self) -> Ordering:
        return self.ordering if self.direction == 1 else self.neighbour


    @property
    def target(self) -> Ordering:
        return self.neighbour if self.direction == 1 else self.ordering


@dataclass(frozen=True)
class BoundaryPath:
    name:str
    steps:Tuple[PathStep, ...]


    def __len__(self) -> int:
        return len(self.steps)
