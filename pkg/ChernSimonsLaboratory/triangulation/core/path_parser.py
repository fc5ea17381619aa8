from __future__ import annotations
from typing import List, Optional, Tuple
import re

from errors import ParseError
from triangulation.models import BoundaryPath, EdgeType, PathStep

_TOKEN = re.compile(r"\S+")
_EDGE_TYPES = {"E2": EdgeType.E2, "E3": EdgeType.E3}
_DIRECTIONS = {"+": 1, "-": -1}



def parse_paths(text:str) -> List[BoundaryPath]:
    """
    Paths on the boundary of P(T):

        path <name>
        step <tet> <ordering as four label digits> <E2|E3> <+|->
    """
    paths:List[BoundaryPath] = []
    name:Optional[str] = None
    steps:List[PathStep] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(content)]
        if not tokens:
            continue

        keyword, column = tokens[0]
        if keyword == "path":
            if len(tokens) != 2:
                raise ParseError("expected 'path <name>'", line_no, column)
            if name is not None:
                paths.append(BoundaryPath(name, tuple(steps)))
            name, steps = tokens[1][0], []
        elif keyword == "step":
            if name is None:
                raise ParseError("'step' before any 'path'", line_no, column)
            steps.append(_read_step(tokens, line_no))
        else:
            raise ParseError(f"unknown keyword {keyword!r}", line_no, column)

    if name is not None:
        paths.append(BoundaryPath(name, tuple(steps)))

    return paths


def _read_step(tokens:List[Tuple[str, int]], line_no:int) -> PathStep:
    if len(tokens) != 5:
        raise ParseError("expected 'step <tet> <ordering> <E2|E3> <+|->'", line_no, tokens[0][1])

    (tet_text, tet_col), (ordering_text, ordering_col), (edge_text, edge_col), (sign_text, sign_col) = tokens[1:]
    if not tet_text.isdigit():
        raise ParseError(f"expected a tetrahedron index, found {tet_text!r}", line_no, tet_col)
    if len(ordering_text) != 4 or sorted(ordering_text) != ["0", "1", "2", "3"]:
        raise ParseError(f"{ordering_text!r} is not an ordering of 0123", line_no, ordering_col)
    if edge_text not in _EDGE_TYPES:
        raise ParseError(f"edge type must be E2 or E3, found {edge_text!r}", line_no, edge_col)
    if sign_text not in _DIRECTIONS:
        raise ParseError(f"direction must be + or -, found {sign_text!r}", line_no, sign_col)

    digits = [int(c) for c in ordering_text]

    return PathStep(int(tet_text), (digits[0], digits[1], digits[2], digits[3]), _EDGE_TYPES[edge_text], _DIRECTIONS[sign_text])


def serialize_paths(paths:List[BoundaryPath]) -> str:
    lines = []
    for path in paths:
        lines.append(f"path {path.name}")
        for step in path.steps:
            ordering = "".join(str(label) for label in step.ordering)
            sign = "+" if step.direction == 1 else "-"
            lines.append(f"step {step.tet} {ordering} {step.edge_type.name} {sign}")

    return "\n".join(lines) + "\n"
