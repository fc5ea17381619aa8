from __future__ import annotations
from typing import Iterator, Optional, Tuple
from dataclasses import dataclass, field
from sortedcontainers import SortedDict

from .ordering_class import Ordering



@dataclass(frozen=True)
class Gluing:
    tet:int
    face:int
    perm:Tuple[int, int, int, int] #label i of the source goes to label perm[i] of the target


    def __call__(self, label:int) -> int:
        return self.perm[label]


    def inverse(self, source_tet:int, source_face:int) -> Gluing:
        inverse_perm = [0, 0, 0, 0]
        for i, image in enumerate(self.perm):
            inverse_perm[image] = i

        return Gluing(source_tet, source_face, (inverse_perm[0], inverse_perm[1], inverse_perm[2], inverse_perm[3]))


@dataclass(frozen=True)
class AbstractTriangulation:
    tets:int
    gluings:SortedDict = field(default_factory=SortedDict) #(tet, face) -> Gluing
    strict:bool = True


    def glued(self, tet:int, face:int) -> Optional[Gluing]:
        return self.gluings.get((tet, face))


    def faces(self) -> Iterator[Tuple[int, int]]:
        for tet in range(self.tets):
            for face in range(4):
                yield tet, face


    @property
    def is_closed(self) -> bool:
        return len(self.gluings) == 4 * self.tets


    @property
    def face_pairs(self) -> Tuple[Tuple[int, int, Gluing], ...]:
        #Each identified pair once, listed from its smaller (tet, face) side
        pairs = []
        for (tet, face), gluing in self.gluings.items():
            if (tet, face) <= (gluing.tet, gluing.face):
                pairs.append((tet, face, gluing))

        return tuple(pairs)


    def across_last(self, tet:int, ordering:Ordering) -> Optional[Tuple[int, Ordering]]:
        """Partner of the P(T) vertex (tet, abcd) through the face opposite d."""
        gluing = self.glued(tet, ordering[3])
        if gluing is None:
            return None

        image = (gluing(ordering[0]), gluing(ordering[1]), gluing(ordering[2]), gluing(ordering[3]))

        return gluing.tet, image


    def disjoint_union(self, other:AbstractTriangulation) -> AbstractTriangulation:
        gluings = SortedDict(self.gluings)
        for (tet, face), gluing in other.gluings.items():
            gluings[(tet + self.tets, face)] = Gluing(gluing.tet + self.tets, gluing.face, gluing.perm)

        return AbstractTriangulation(self.tets + other.tets, gluings, self.strict and other.strict)
