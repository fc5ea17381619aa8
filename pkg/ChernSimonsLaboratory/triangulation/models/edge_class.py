from __future__ import annotations
from typing import Tuple
from dataclasses import dataclass

from .ordering_class import Ordering



@dataclass(frozen=True)
class StarEntry:
    tet:int
    tail:int
    head:int
    left:int #z_i, the star vertex shared with the previous entry
    right:int #z_i+1, shared with the next entry


    @property
    def ordering(self) -> Ordering:
        return (self.tail, self.head, self.left, self.right)


    @property
    def edge(self) -> Tuple[int, int]:
        return (min(self.tail, self.head), max(self.tail, self.head))


@dataclass(frozen=True)
class EdgeClass:
    index:int
    star:Tuple[StarEntry, ...]
    closed:bool


    @property
    def degree(self) -> int:
        return len(self.star)


    @property
    def seed(self) -> StarEntry:
        return self.star[0]
