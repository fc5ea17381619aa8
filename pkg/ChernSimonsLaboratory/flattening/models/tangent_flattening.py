from __future__ import annotations
from typing import Tuple
from dataclasses import dataclass



@dataclass(frozen=True)
class TangentFlattening:
    dl1:Tuple[complex, ...]
    dl2:Tuple[complex, ...]


    @property
    def dl3(self) -> Tuple[complex, ...]:
        return tuple(-a - b for a, b in zip(self.dl1, self.dl2))


    @property
    def is_zero(self) -> bool:
        return all(v == 0 for v in self.dl1 + self.dl2)
