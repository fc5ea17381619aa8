from __future__ import annotations
from typing import List, Tuple
from dataclasses import dataclass
import cmath
import re

from errors import DegenerateShapeError, ParseError
from triangulation.models import Branching

DEGENERACY_TOLERANCE = 1e-10

_TOKEN = re.compile(r"\S+")



def check_shape(tet:int, z:complex, tolerance:float=DEGENERACY_TOLERANCE) -> None:
    if not cmath.isfinite(z) or abs(z) < tolerance or abs(z - 1) < tolerance:
        raise DegenerateShapeError(tet, z)


@dataclass(frozen=True)
class ShapeAssignment:
    shapes:Tuple[complex, ...]


    def __post_init__(self) -> None:
        for tet, z in enumerate(self.shapes):
            check_shape(tet, z)


    def __len__(self) -> int:
        return len(self.shapes)


    def __getitem__(self, tet:int) -> complex:
        return self.shapes[tet]


    def is_geometric(self, branching:Branching) -> bool:
        #Positively oriented tetrahedra sit on Im z < 0 under (inf, 0, 1, z)
        return all(-sign * z.imag > 0 for sign, z in zip(branching.signs, self.shapes))


    @staticmethod
    def REGULAR_INITIAL(branching:Branching) -> ShapeAssignment:
        return ShapeAssignment(tuple(complex(0.5, -0.8 * sign) for sign in branching.signs))



def parse_shapes(text:str, tets:int) -> ShapeAssignment:
    values:List[complex] = [complex("nan")] * tets
    given = [False] * tets
    for line_no, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(content)]
        if not tokens:
            continue
        if tokens[0][0] != "shape" or len(tokens) != 4:
            raise ParseError("expected 'shape <tet> <re> <im>'", line_no, tokens[0][1])

        try:
            tet = int(tokens[1][0])
        except ValueError:
            raise ParseError(f"expected a tetrahedron index, found {tokens[1][0]!r}", line_no, tokens[1][1]) from None
        if not 0 <= tet < tets:
            raise ParseError(f"tetrahedron {tet} out of range", line_no, tokens[1][1])
        if given[tet]:
            raise ParseError(f"tetrahedron {tet} given twice", line_no, tokens[1][1])

        try:
            values[tet] = complex(float(tokens[2][0]), float(tokens[3][0]))
        except ValueError:
            raise ParseError("expected two real numbers", line_no, tokens[2][1]) from None
        given[tet] = True

    if not all(given):
        raise ParseError(f"missing shapes for tetrahedra {[t for t in range(tets) if not given[t]]}", len(text.splitlines()) + 1)

    return ShapeAssignment(tuple(values))


def serialize_shapes(assignment:ShapeAssignment) -> str:
    return "".join(f"shape {tet} {z.real!r} {z.imag!r}\n" for tet, z in enumerate(assignment.shapes))
