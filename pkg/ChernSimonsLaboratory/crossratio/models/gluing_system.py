from __future__ import annotations
from typing import Tuple
from dataclasses import dataclass
from enum import Enum, auto

from triangulation.models import Ordering



class RelationKind(Enum):
    EDGE = auto()
    CUSP = auto()


@dataclass(frozen=True)
class Factor:
    tet:int
    roles:Ordering
    exponent:int


@dataclass(frozen=True)
class GluingRelation:
    name:str
    kind:RelationKind
    factors:Tuple[Factor, ...]
    constant:int = 1 #+1 or -1


@dataclass(frozen=True)
class GluingSystem:
    tets:int
    relations:Tuple[GluingRelation, ...]


    def __len__(self) -> int:
        return len(self.relations)


    @property
    def edge_relations(self) -> Tuple[GluingRelation, ...]:
        return tuple(r for r in self.relations if r.kind == RelationKind.EDGE)
