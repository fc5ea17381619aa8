from __future__ import annotations
from typing import List, Optional, Sequence, Tuple
import itertools
import logging
import math
import numpy as np

from errors import NoIntegerSolution, RoundingAmbiguity
from triangulation.models import Branching, BoundaryPath
from flattening.models import I_PI, Flattening, LinearForm, TetFlattening

from .integer_lattice import solve_integer_system
from .linear_forms import closed_edge_forms, edge_flattening_residuals, path_form

logger = logging.getLogger(__name__)

GUARD_BAND = 1e-6
CANDIDATES_PER_PATH = 3



def _lattice_index(value:complex, guard:float) -> Optional[int]:
    k = round((value / I_PI).real)
    return k if abs(value - k * I_PI) < guard else None


def _integer_row(form:LinearForm, factor:int=1) -> List[int]:
    row = []
    for coefficient in form.lift_coefficients():
        scaled = coefficient * factor
        assert scaled.q == 1
        row.append(int(scaled))

    return row


class FlatteningSolver:
    """
    Integer lifts (p, q) per tetrahedron making every closed edge sum of flattening values vanish.
    With principal logs the edge sum is i*pi*k, and the lifts must solve 2 * (c . x) = -k exactly.
    """

    def __init__(self, branching:Branching, shapes:Sequence[complex], guard:float=GUARD_BAND) -> None:
        self.__branching = branching
        self.__principal = tuple(TetFlattening.FROM_LIFTS(z, 0, 0) for z in shapes)
        self.__guard = guard
        self.__forms = closed_edge_forms(branching)


    def edge_system(self) -> Tuple[np.ndarray, np.ndarray]:
        rows:List[List[int]] = []
        rhs:List[int] = []
        odd:List[int] = []
        for edge, form in enumerate(self.__forms):
            value = form.evaluate(self.__principal)
            k = _lattice_index(value, self.__guard)
            if k is None:
                raise RoundingAmbiguity(edge, value, self.__guard)
            rows.append(_integer_row(form))
            rhs.append(-k // 2)
            odd.append(k % 2)

        if any(odd):
            raise NoIntegerSolution(odd, "edge sums are odd multiples of i*pi (parity obstruction)")

        return self.__matrix(rows), np.array(rhs, dtype=object)


    def solve(self, paths:Sequence[BoundaryPath]=()) -> Flattening:
        matrix, rhs = self.edge_system()
        solution:Optional[np.ndarray] = None
        if paths:
            solution = self.__normalised(matrix, rhs, paths)
        if solution is None:
            solution = solve_integer_system(matrix, rhs)

        lifts = tuple((int(solution[2 * t]), int(solution[2 * t + 1])) for t in range(len(self.__principal)))
        tets = tuple(TetFlattening.FROM_LIFTS(f.z, p, q) for f, (p, q) in zip(self.__principal, lifts))
        flattening = Flattening(self.__branching.triangulation, self.__branching, tets)

        residuals = edge_flattening_residuals(flattening)
        assert all(abs(r) < 1e-6 for r in residuals)
        logger.info("flattening solved with lifts %s", lifts)

        return flattening


    def __normalised(self, matrix:np.ndarray, rhs:np.ndarray, paths:Sequence[BoundaryPath]) -> Optional[np.ndarray]:
        #Each path log-holonomy is i*pi*(k/2 + m) with m = (2 * form) . x an integer
        rows:List[List[int]] = []
        centres:List[float] = []
        candidates:List[List[int]] = []
        for path in paths:
            doubled = path_form(self.__branching, path).scale(2)
            k = _lattice_index(doubled.evaluate(self.__principal), self.__guard)
            if k is None:
                logger.warning("path %s is not near the lattice i*pi*Z/2, peripheral normalisation skipped", path.name)
                return None
            rows.append(_integer_row(doubled))
            centre = -k / 2
            nearest = sorted(range(math.floor(centre) - 2, math.ceil(centre) + 3), key=lambda m: (abs(m - centre), m))
            centres.append(centre)
            candidates.append(nearest[:CANDIDATES_PER_PATH])

        combos = sorted(
            itertools.product(*candidates),
            key=lambda combo: (sum(abs(m - c) for m, c in zip(combo, centres)), combo),
        )
        full = np.vstack([matrix, self.__matrix(rows)]) if matrix.shape[0] else self.__matrix(rows)
        for combo in combos:
            try:
                solution = solve_integer_system(full, np.concatenate([rhs, np.array(combo, dtype=object)]))
            except NoIntegerSolution:
                continue
            logger.info("peripheral normalisation %s", dict(zip((p.name for p in paths), combo)))
            return solution

        logger.warning("no peripheral normalisation is feasible, keeping the edge-only flattening")
        return None


    def __matrix(self, rows:List[List[int]]) -> np.ndarray:
        columns = 2 * len(self.__principal)
        if not rows:
            return np.zeros((0, columns), dtype=object)

        return np.array(rows, dtype=object).reshape(len(rows), columns)



def solve_flattening(branching:Branching, shapes:Sequence[complex], paths:Sequence[BoundaryPath]=(), guard:float=GUARD_BAND) -> Flattening:
    return FlatteningSolver(branching, shapes, guard).solve(paths)
