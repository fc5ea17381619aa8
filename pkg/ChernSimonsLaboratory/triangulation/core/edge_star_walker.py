from __future__ import annotations
from typing import Dict, List, Optional, Set, Tuple
from sortedcontainers import SortedDict
import logging

from errors import EdgeStarError
from triangulation.models import AbstractTriangulation, EdgeClass, StarEntry

logger = logging.getLogger(__name__)

TetEdge = Tuple[int, int, int] #(tet, a, b) with a < b



class EdgeStarWalker:
    def __init__(self, triangulation:AbstractTriangulation) -> None:
        self.__triangulation = triangulation
        self.__visited:Set[TetEdge] = set()


    def walk(self) -> List[EdgeClass]:
        classes:List[EdgeClass] = []
        for tet in range(self.__triangulation.tets):
            for a in range(4):
                for b in range(a + 1, 4):
                    if (tet, a, b) in self.__visited:
                        continue
                    left, right = [v for v in range(4) if v not in (a, b)]
                    star, closed = self.__walk_star(StarEntry(tet, a, b, left, right))
                    classes.append(EdgeClass(len(classes), star, closed))

        total = sum(edge_class.degree for edge_class in classes)
        assert total == 6 * self.__triangulation.tets
        logger.info("found %d edge classes", len(classes))

        return classes


    def next_entry(self, entry:StarEntry) -> Optional[StarEntry]:
        gluing = self.__triangulation.glued(entry.tet, entry.left)
        if gluing is None:
            return None

        return StarEntry(gluing.tet, gluing(entry.tail), gluing(entry.head), gluing(entry.right), gluing(entry.left))


    def previous_entry(self, entry:StarEntry) -> Optional[StarEntry]:
        gluing = self.__triangulation.glued(entry.tet, entry.right)
        if gluing is None:
            return None

        return StarEntry(gluing.tet, gluing(entry.tail), gluing(entry.head), gluing(entry.right), gluing(entry.left))


    def __walk_star(self, seed:StarEntry) -> Tuple[Tuple[StarEntry, ...], bool]:
        chain = [seed]
        seen:Dict[TetEdge, StarEntry] = {_key(seed): seed}
        current = self.next_entry(seed)
        while current is not None:
            if _key(current) in seen:
                self.__check_return(seen[_key(current)], current)
                assert current == seed
                self.__visited.update(seen)
                return tuple(chain), True
            seen[_key(current)] = current
            chain.append(current)
            current = self.next_entry(current)

        #Open chain, rewind to its boundary end
        head:List[StarEntry] = []
        current = self.previous_entry(seed)
        while current is not None:
            if _key(current) in seen:
                self.__check_return(seen[_key(current)], current)
                raise EdgeStarError(current.tet, current.edge, "open star revisits an entry")
            seen[_key(current)] = current
            head.append(current)
            current = self.previous_entry(current)

        self.__visited.update(seen)
        return tuple(reversed(head)) + tuple(chain), False


    @staticmethod
    def __check_return(first:StarEntry, again:StarEntry) -> None:
        if (first.tail, first.head) != (again.tail, again.head):
            raise EdgeStarError(again.tet, again.edge, "star returns with reversed direction")
        if (first.left, first.right) != (again.left, again.right):
            raise EdgeStarError(again.tet, again.edge, "star returns with inconsistent far vertices")



def _key(entry:StarEntry) -> TetEdge:
    return (entry.tet,) + entry.edge


def edge_classes(triangulation:AbstractTriangulation) -> List[EdgeClass]:
    return EdgeStarWalker(triangulation).walk()


def edge_lookup(classes:List[EdgeClass]) -> SortedDict:
    """(tet, a, b) with a < b -> (class index, star entry)."""
    lookup = SortedDict()
    for edge_class in classes:
        for entry in edge_class.star:
            lookup[_key(entry)] = (edge_class.index, entry)

    return lookup
