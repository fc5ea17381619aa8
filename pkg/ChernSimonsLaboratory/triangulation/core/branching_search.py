from __future__ import annotations
from typing import Dict, List, Optional, Tuple
import logging
import re

from errors import ParseError
from triangulation.models import AbstractTriangulation, Branching, EdgeClass

from .edge_star_walker import edge_classes

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"\S+")



class BranchingSearch:
    """
    Depth-first search over edge-class directions, stored direction first.
    A partial assignment is pruned as soon as a face carries a directed 3-cycle.
    """

    def __init__(self, triangulation:AbstractTriangulation, classes:Optional[List[EdgeClass]]=None) -> None:
        self.__triangulation = triangulation
        self.__classes = classes if classes is not None else edge_classes(triangulation)
        self.__directions:List[Optional[bool]] = [None] * len(self.__classes)
        #(tet, a, b) -> (class index, True if a -> b is the stored tail -> head)
        self.__edge_map:Dict[Tuple[int, int, int], Tuple[int, bool]] = {}
        for edge_class in self.__classes:
            for entry in edge_class.star:
                self.__edge_map[(entry.tet, entry.tail, entry.head)] = (edge_class.index, True)
                self.__edge_map[(entry.tet, entry.head, entry.tail)] = (edge_class.index, False)

        #faces touched by each class
        self.__faces:List[List[Tuple[int, int]]] = [[] for _ in self.__classes]
        for edge_class in self.__classes:
            for entry in edge_class.star:
                for face in (entry.left, entry.right):
                    if (entry.tet, face) not in self.__faces[edge_class.index]:
                        self.__faces[edge_class.index].append((entry.tet, face))


    def search(self, limit:int) -> List[Branching]:
        found:List[Branching] = []
        if limit <= 0:
            return found

        self.__extend(0, limit, found)
        logger.info("branching search found %d branching(s) (limit %d)", len(found), limit)

        return found


    def is_forward(self, tet:int, a:int, b:int, directions:Tuple[bool, ...]) -> bool:
        """True if the branching directs the edge a -> b."""
        index, stored = self.__edge_map[(tet, a, b)]
        return directions[index] == stored


    def build(self, directions:Tuple[bool, ...]) -> Optional[Branching]:
        orders = []
        for tet in range(self.__triangulation.tets):
            indegree = {label: 0 for label in range(4)}
            for a in range(4):
                for b in range(4):
                    if a != b and self.is_forward(tet, a, b, directions):
                        indegree[b] += 1
            if sorted(indegree.values()) != [0, 1, 2, 3]:
                return None
            order = tuple(sorted(range(4), key=lambda label: indegree[label]))
            orders.append((order[0], order[1], order[2], order[3]))

        branching = Branching(self.__triangulation, tuple(self.__classes), directions, tuple(orders))
        self.__recheck(branching)

        return branching


    def __extend(self, index:int, limit:int, found:List[Branching]) -> None:
        if len(found) >= limit:
            return

        if index == len(self.__classes):
            directions = tuple(bool(d) for d in self.__directions)
            branching = self.build(directions)
            assert branching is not None
            found.append(branching)
            return

        for choice in (True, False):
            self.__directions[index] = choice
            if all(self.__face_acyclic(tet, face) for tet, face in self.__faces[index]):
                self.__extend(index + 1, limit, found)
            if len(found) >= limit:
                break
        self.__directions[index] = None


    def __face_acyclic(self, tet:int, face:int) -> bool:
        a, b, c = [v for v in range(4) if v != face]
        forward = []
        for u, v in ((a, b), (b, c), (c, a)):
            class_index, stored = self.__edge_map[(tet, u, v)]
            direction = self.__directions[class_index]
            if direction is None:
                return True
            forward.append(direction == stored)

        return not (all(forward) or not any(forward))


    def __recheck(self, branching:Branching) -> None:
        #Every directed edge must point up the order of its tetrahedron
        for tet, order in enumerate(branching.orders):
            for i in range(4):
                for j in range(i + 1, 4):
                    assert self.is_forward(tet, order[i], order[j], branching.directions)



def find_branchings(triangulation:AbstractTriangulation, limit:int, classes:Optional[List[EdgeClass]]=None) -> List[Branching]:
    return BranchingSearch(triangulation, classes).search(limit)


def branching_from_directions(triangulation:AbstractTriangulation, directions:Tuple[bool, ...], classes:Optional[List[EdgeClass]]=None) -> Optional[Branching]:
    return BranchingSearch(triangulation, classes).build(tuple(directions))


def parse_branching(text:str, triangulation:AbstractTriangulation) -> Branching:
    classes = edge_classes(triangulation)
    directions:Dict[int, bool] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(content)]
        if not tokens:
            continue
        if tokens[0][0] != "branch" or len(tokens) != 4:
            raise ParseError("expected 'branch <edge-class> <tail> <head>'", line_no, tokens[0][1])

        try:
            index, tail, head = (int(token) for token, _ in tokens[1:])
        except ValueError:
            raise ParseError("expected integers", line_no, tokens[1][1]) from None

        if not 0 <= index < len(classes):
            raise ParseError(f"no edge class {index}", line_no, tokens[1][1])
        if index in directions:
            raise ParseError(f"edge class {index} given twice", line_no, tokens[1][1])

        seed = classes[index].seed
        if (tail, head) == (seed.tail, seed.head):
            directions[index] = True
        elif (tail, head) == (seed.head, seed.tail):
            directions[index] = False
        else:
            raise ParseError(f"edge {tail}-{head} is not the seed edge {seed.tail}-{seed.head} of class {index}", line_no, tokens[2][1])

    missing = [index for index in range(len(classes)) if index not in directions]
    if missing:
        raise ParseError(f"edge classes {missing} have no direction", len(text.splitlines()) + 1)

    branching = branching_from_directions(triangulation, tuple(directions[i] for i in range(len(classes))), classes)
    if branching is None:
        raise ParseError("directions contain a cycle", len(text.splitlines()) + 1)

    return branching


def serialize_branching(branching:Branching) -> str:
    lines = []
    for edge_class, direction in zip(branching.edge_classes, branching.directions):
        seed = edge_class.seed
        tail, head = (seed.tail, seed.head) if direction else (seed.head, seed.tail)
        lines.append(f"branch {edge_class.index} {tail} {head}")

    return "\n".join(lines) + "\n"
