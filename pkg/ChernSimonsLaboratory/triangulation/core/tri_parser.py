from __future__ import annotations
from typing import Dict, List, Optional, Tuple
from sortedcontainers import SortedDict
import logging
import re

from errors import GluingError, OrientationViolation, ParseError
from triangulation.models import AbstractTriangulation, Gluing, permutation_parity

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"\S+")



class TriangulationParser:
    """
    Reader for the `.tri` format:

        tri 1
        tets N
        glue t f t' p0 p1 p2 p3

    `perm` sends label i of tetrahedron t to label p_i of t', so face f is glued to face p_f.
    A pair may be listed from one side only; the partner line is then implied.
    """

    def __init__(self, text:str, strict:bool=True) -> None:
        self.__text = text
        self.__strict = strict
        self.__tets:Optional[int] = None
        self.__gluings:Dict[Tuple[int, int], Gluing] = {}
        self.__lines:Dict[Tuple[int, int], int] = {}


    def parse(self) -> AbstractTriangulation:
        header_seen = False
        for line_no, raw in enumerate(self.__text.splitlines(), start=1):
            content = raw.split("#", 1)[0]
            tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(content)]
            if not tokens:
                continue

            keyword, column = tokens[0]
            if not header_seen:
                if keyword != "tri" or len(tokens) != 2 or tokens[1][0] != "1":
                    raise ParseError("expected header 'tri 1'", line_no, column)
                header_seen = True
            elif keyword == "tets":
                self.__read_tets(tokens, line_no)
            elif keyword == "glue":
                self.__read_glue(tokens, line_no)
            else:
                raise ParseError(f"unknown keyword {keyword!r}", line_no, column)

        if not header_seen:
            raise ParseError("missing header 'tri 1'", 1)
        if self.__tets is None:
            raise ParseError("missing 'tets' line", len(self.__text.splitlines()) + 1)

        self.__complete_pairs()
        if self.__strict:
            for tet in range(self.__tets):
                for face in range(4):
                    if (tet, face) not in self.__gluings:
                        raise GluingError(tet, face, "face is not glued")

        triangulation = AbstractTriangulation(self.__tets, SortedDict(self.__gluings), self.__strict)
        logger.info("parsed triangulation with %d tetrahedra and %d glued faces", triangulation.tets, len(self.__gluings))

        return triangulation


    def __read_tets(self, tokens:List[Tuple[str, int]], line_no:int) -> None:
        if self.__tets is not None:
            raise ParseError("'tets' given twice", line_no, tokens[0][1])
        if len(tokens) != 2:
            raise ParseError("expected 'tets N'", line_no, tokens[0][1])

        self.__tets = self.__integer(tokens[1], line_no, 0, None)


    def __read_glue(self, tokens:List[Tuple[str, int]], line_no:int) -> None:
        if self.__tets is None:
            raise ParseError("'glue' before 'tets'", line_no, tokens[0][1])
        if len(tokens) != 8:
            raise ParseError(f"expected 7 integers after 'glue', found {len(tokens) - 1}", line_no, tokens[0][1])

        tet = self.__integer(tokens[1], line_no, 0, self.__tets - 1)
        face = self.__integer(tokens[2], line_no, 0, 3)
        other = self.__integer(tokens[3], line_no, 0, self.__tets - 1)
        perm = tuple(self.__integer(token, line_no, 0, 3) for token in tokens[4:])
        if sorted(perm) != [0, 1, 2, 3]:
            raise ParseError(f"{list(perm)} is not a permutation of 0..3", line_no, tokens[4][1])

        if permutation_parity(perm) == 0:
            raise OrientationViolation(tet, face, line_no)
        if (tet, face) in self.__gluings:
            raise GluingError(tet, face, f"glued twice (first on line {self.__lines[(tet, face)]})", line_no)

        self.__gluings[(tet, face)] = Gluing(other, perm[face], (perm[0], perm[1], perm[2], perm[3]))
        self.__lines[(tet, face)] = line_no


    def __complete_pairs(self) -> None:
        for (tet, face), gluing in list(self.__gluings.items()):
            partner = (gluing.tet, gluing.face)
            inverse = gluing.inverse(tet, face)
            existing = self.__gluings.get(partner)
            if existing is None:
                logger.debug("implied partner gluing for face %d of tetrahedron %d", gluing.face, gluing.tet)
                self.__gluings[partner] = inverse
                self.__lines[partner] = self.__lines[(tet, face)]
            elif existing != inverse:
                raise GluingError(tet, face, "gluing is not an involution", self.__lines[(tet, face)])


    @staticmethod
    def __integer(token:Tuple[str, int], line_no:int, low:int, high:Optional[int]) -> int:
        text, column = token
        try:
            value = int(text)
        except ValueError:
            raise ParseError(f"expected an integer, found {text!r}", line_no, column) from None

        if value < low or (high is not None and value > high):
            raise ParseError(f"{value} out of range", line_no, column)

        return value



def parse_triangulation(text:str, strict:bool=True) -> AbstractTriangulation:
    return TriangulationParser(text, strict).parse()


def serialize_triangulation(triangulation:AbstractTriangulation) -> str:
    lines = ["tri 1", f"tets {triangulation.tets}"]
    for (tet, face), gluing in triangulation.gluings.items():
        lines.append(f"glue {tet} {face} {gluing.tet} " + " ".join(str(p) for p in gluing.perm))

    return "\n".join(lines) + "\n"
