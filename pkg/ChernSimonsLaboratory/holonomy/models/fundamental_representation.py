from __future__ import annotations
from typing import Dict, Tuple
from dataclasses import dataclass

from .mat2 import Mat2



@dataclass(frozen=True)
class FundamentalRepresentation:
    base_tet:int
    tree:Tuple[Tuple[int, int], ...] #(tet, face) gluings in the spanning tree
    generators:Dict[Tuple[int, int], Mat2] #(tet, face) of each non-tree pair -> matrix
    relation_residuals:Tuple[float, ...] #per closed edge class, projective


    @property
    def max_residual(self) -> float:
        return max(self.relation_residuals, default=0.0)
