from __future__ import annotations
from typing import Tuple
from dataclasses import dataclass

from triangulation.models import AbstractTriangulation, Branching, Ordering, classify

from .tet_flattening import I_PI, TetFlattening



def expand_flattening(flattening:TetFlattening, roles:Ordering) -> complex:
    """L(o) = sign * (base + offset * i*pi) over the six ordering classes."""
    ordering_class, sign = classify(roles)
    base = (flattening.l1, flattening.l2, flattening.l3)[ordering_class.shape_index]

    return sign * (base + ordering_class.offset * I_PI)


@dataclass(frozen=True)
class Flattening:
    triangulation:AbstractTriangulation
    branching:Branching
    tets:Tuple[TetFlattening, ...]


    def value(self, tet:int, ordering:Ordering) -> complex:
        """Flattening value at an ordering given in labels."""
        return expand_flattening(self.tets[tet], self.branching.roles(tet, ordering))


    @property
    def shapes(self) -> Tuple[complex, ...]:
        return tuple(f.z for f in self.tets)


    @property
    def lifts(self) -> Tuple[Tuple[int, int, int], ...]:
        return tuple((f.p, f.q, f.sigma) for f in self.tets)


    def with_lifts(self, lifts:Tuple[Tuple[int, int], ...]) -> Flattening:
        tets = tuple(TetFlattening.FROM_LIFTS(f.z, p, q) for f, (p, q) in zip(self.tets, lifts))
        return Flattening(self.triangulation, self.branching, tets)
