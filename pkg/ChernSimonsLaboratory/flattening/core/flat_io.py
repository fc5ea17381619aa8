from __future__ import annotations
from typing import Dict, Sequence, Tuple
import re

from errors import ParseError
from triangulation.models import Branching
from flattening.models import Flattening, TetFlattening, region_bit

_TOKEN = re.compile(r"\S+")



def parse_flat(text:str, branching:Branching, shapes:Sequence[complex]) -> Flattening:
    """`flat <tet> <p> <q> <sigma>` lines; sigma must be the region bit of the shape."""
    lifts:Dict[int, Tuple[int, int]] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(content)]
        if not tokens:
            continue
        if tokens[0][0] != "flat" or len(tokens) != 5:
            raise ParseError("expected 'flat <tet> <p> <q> <sigma>'", line_no, tokens[0][1])

        try:
            tet, p, q, sigma = (int(token) for token, _ in tokens[1:])
        except ValueError:
            raise ParseError("expected four integers", line_no, tokens[1][1]) from None

        if not 0 <= tet < len(shapes):
            raise ParseError(f"tetrahedron {tet} out of range", line_no, tokens[1][1])
        if tet in lifts:
            raise ParseError(f"tetrahedron {tet} given twice", line_no, tokens[1][1])
        if sigma != region_bit(shapes[tet]):
            raise ParseError(f"sigma {sigma} does not match the region bit {region_bit(shapes[tet])} of shape {shapes[tet]!r}", line_no, tokens[4][1])
        lifts[tet] = (p, q)

    missing = [t for t in range(len(shapes)) if t not in lifts]
    if missing:
        raise ParseError(f"missing lifts for tetrahedra {missing}", len(text.splitlines()) + 1)

    tets = tuple(TetFlattening.FROM_LIFTS(z, *lifts[t]) for t, z in enumerate(shapes))

    return Flattening(branching.triangulation, branching, tets)


def serialize_flat(flattening:Flattening) -> str:
    return "".join(f"flat {tet} {p} {q} {sigma}\n" for tet, (p, q, sigma) in enumerate(flattening.lifts))
