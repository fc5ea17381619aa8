from __future__ import annotations
from typing import List, Set, Tuple
import logging

from triangulation.models import EdgeType, Ordering, PathStep, swap
from holonomy.models import IDENTITY, CellReport, LiftedCocycle, Mat2, deviation

from .cocycle_builder import ORDERINGS
from .path_holonomy import path_holonomy

logger = logging.getLogger(__name__)

#(kind, alternating generators of the cell boundary)
CELLS = (
    ("square", (EdgeType.E1, EdgeType.E3) * 2),
    ("face hexagon", (EdgeType.E1, EdgeType.E2) * 3),
    ("vertex hexagon", (EdgeType.E2, EdgeType.E3) * 3),
)



def _cell_steps(tet:int, start:Ordering, generators:Tuple[EdgeType, ...]) -> List[PathStep]:
    steps = []
    current = start
    for edge_type in generators:
        steps.append(PathStep(tet, current, edge_type, 1))
        current = swap(current, edge_type)
    assert current == start

    return steps


def _row(name:str, kind:str, matrix:Mat2) -> Tuple[str, str, float, bool]:
    return (name, kind, deviation(matrix, IDENTITY), deviation(matrix, -IDENTITY) < 1e-6)


def verify_cells(cocycle:LiftedCocycle) -> CellReport:
    rows = []
    for tet in range(len(cocycle.flattening.tets)):
        for kind, generators in CELLS:
            seen:Set[frozenset] = set()
            for start in ORDERINGS:
                steps = _cell_steps(tet, start, generators)
                cell = frozenset(step.ordering for step in steps)
                if cell in seen:
                    continue
                seen.add(cell)
                name = f"tet {tet} at " + "".join(str(v) for v in start)
                rows.append(_row(name, kind, path_holonomy(cocycle, steps)))

    branching = cocycle.flattening.branching
    for edge_class in branching.edge_classes:
        if not edge_class.closed:
            continue
        steps = [PathStep(entry.tet, entry.ordering, EdgeType.E3, 1) for entry in edge_class.star]
        rows.append(_row(f"edge {edge_class.index}", "edge star", path_holonomy(cocycle, steps)))

    report = CellReport(rows)
    logger.info("checked %d cells, max deviation %.3e", len(report), report.max_deviation)

    return report
