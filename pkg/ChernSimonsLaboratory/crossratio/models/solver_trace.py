from __future__ import annotations
from typing import List, Optional, Tuple
from dataclasses import dataclass, field



@dataclass(frozen=True)
class StartRecord:
    start:int
    initial:Tuple[complex, ...]
    iterations:int
    residual:float
    jacobian_rank:int
    converged:bool
    failure:Optional[str] = None


@dataclass
class SolverTrace:
    records:List[StartRecord] = field(default_factory=list)
    chosen:Optional[int] = None


    def add(self, record:StartRecord) -> None:
        self.records.append(record)


    @property
    def best_residual(self) -> float:
        return min((r.residual for r in self.records), default=float("inf"))
