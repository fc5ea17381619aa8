from __future__ import annotations
from typing import List, Optional, Sequence, Tuple, Union
import logging
import random
import numpy as np

from errors import ChernSimonsError, DegenerateShapeError, NonConvergenceError, SingularJacobianError
from triangulation.models import Branching
from crossratio.configs import SolverConfig
from crossratio.models import GluingSystem, ShapeAssignment, SolverTrace, StartRecord, check_shape

from .gluing_equations import edge_residuals, gluing_jacobian

logger = logging.getLogger(__name__)

SurveyEntry = Tuple[ShapeAssignment, float, int, bool]



class GluingSolver:
    """
    Damped Gauss-Newton on the gluing relations with complex least squares steps.
    A step is halved (scaled by DAMPING) until the residual norm decreases and the trial
    point stays away from 0, 1 and infinity.
    """
    trace:SolverTrace


    def __init__(self, system:GluingSystem, config:SolverConfig, signs:Optional[Sequence[int]]=None) -> None:
        self.__system = system
        self.__config = config
        self.__signs = tuple(signs) if signs is not None else (1,) * system.tets
        assert len(self.__signs) == system.tets
        self.__rank_warned = False
        self.trace = SolverTrace()


    def solve(self, initial:Sequence[complex]) -> ShapeAssignment:
        for tet, z in enumerate(initial):
            check_shape(tet, z, self.__config.DEGENERACY_TOLERANCE)

        self.trace = SolverTrace()
        best:Tuple[float, Tuple[complex, ...]] = (float("inf"), tuple(initial))
        singular:Optional[SingularJacobianError] = None
        for start, point in enumerate(self.__starts(initial)):
            outcome = self.__run_start(start, point)
            if isinstance(outcome, SingularJacobianError):
                singular = singular or outcome
                continue
            record, iterate = outcome
            if record.converged:
                self.trace.chosen = start
                logger.info("gluing solver converged from start %d after %d iteration(s), residual %.3e", start, record.iterations, record.residual)
                return ShapeAssignment(iterate)
            if record.residual < best[0]:
                best = (record.residual, iterate)

        if singular is not None and all(r.failure == "singular" for r in self.trace.records):
            raise singular

        raise NonConvergenceError(best[0], best[1])


    def survey(self, initial:Sequence[complex], branching:Branching) -> List[SurveyEntry]:
        """Run every start and return the distinct solutions, best residual first."""
        self.trace = SolverTrace()
        found:List[SurveyEntry] = []
        for start, point in enumerate(self.__starts(initial)):
            outcome = self.__run_start(start, point)
            if isinstance(outcome, SingularJacobianError):
                continue
            record, iterate = outcome
            if not record.converged:
                continue
            assignment = ShapeAssignment(iterate)
            duplicate = next((i for i, entry in enumerate(found) if _close(entry[0].shapes, iterate)), None)
            if duplicate is None:
                found.append((assignment, record.residual, start, assignment.is_geometric(branching)))
            elif record.residual < found[duplicate][1]:
                found[duplicate] = (assignment, record.residual, found[duplicate][2], assignment.is_geometric(branching))

        found.sort(key=lambda entry: (entry[1], entry[2]))

        return found


    def __starts(self, initial:Sequence[complex]) -> List[Tuple[complex, ...]]:
        rng = random.Random(self.__config.SEED)
        sheet = []
        for _ in range(self.__config.RESTARTS):
            sheet.append(tuple(complex(rng.uniform(-0.5, 1.5), -sign * rng.uniform(0.2, 1.5)) for sign in self.__signs))
        mirror = [tuple(z.conjugate() for z in point) for point in sheet]

        return [tuple(complex(z) for z in initial)] + sheet + mirror


    def __norm(self, point:Sequence[complex]) -> float:
        return float(np.linalg.norm(edge_residuals(self.__system, point, self.__config.DEGENERACY_TOLERANCE)))


    def __run_start(self, start:int, point:Tuple[complex, ...]) -> Union[Tuple[StartRecord, Tuple[complex, ...]], SingularJacobianError]:
        cfg = self.__config
        z = np.array(point, dtype=complex)
        try:
            norm = self.__norm(z)
        except DegenerateShapeError:
            self.trace.add(StartRecord(start, point, 0, float("inf"), 0, False, "degenerate"))
            return self.trace.records[-1], point

        rank = 0
        iterations = 0
        failure:Optional[str] = None
        while norm >= cfg.TOLERANCE and iterations < cfg.MAX_ITERATIONS:
            jacobian = gluing_jacobian(self.__system, z)
            rank = int(np.linalg.matrix_rank(jacobian))
            if rank == 0:
                self.trace.add(StartRecord(start, point, iterations, norm, 0, False, "singular"))
                return SingularJacobianError(tuple(complex(v) for v in z))
            if rank < self.__system.tets and not self.__rank_warned:
                logger.warning("Jacobian has rank %d < %d, solution set is not isolated", rank, self.__system.tets)
                self.__rank_warned = True

            step = np.linalg.lstsq(jacobian, -edge_residuals(self.__system, z, cfg.DEGENERACY_TOLERANCE), rcond=None)[0]
            accepted = False
            scale = 1.0
            for _ in range(cfg.MAX_HALVINGS + 1):
                trial = z + scale * step
                try:
                    trial_norm = self.__norm(trial)
                except ChernSimonsError:
                    scale *= cfg.DAMPING
                    continue
                if trial_norm < norm:
                    z, norm, accepted = trial, trial_norm, True
                    break
                scale *= cfg.DAMPING

            iterations += 1
            logger.debug("start %d iteration %d: residual %.3e, scale %g", start, iterations, norm, scale)
            if not accepted:
                failure = "stalled"
                break

        converged = norm < cfg.TOLERANCE
        iterate = tuple(complex(v) for v in z)
        self.trace.add(StartRecord(start, point, iterations, norm, rank, converged, None if converged else (failure or "iterations")))

        return self.trace.records[-1], iterate



def _close(a:Sequence[complex], b:Sequence[complex], tolerance:float=1e-8) -> bool:
    return all(abs(x - y) < tolerance for x, y in zip(a, b))


def solve_gluing(system:GluingSystem, initial:Sequence[complex], config:SolverConfig, signs:Optional[Sequence[int]]=None) -> ShapeAssignment:
    return GluingSolver(system, config, signs).solve(initial)


def survey_solutions(system:GluingSystem, config:SolverConfig, branching:Branching, initial:Optional[Sequence[complex]]=None) -> List[SurveyEntry]:
    start = initial if initial is not None else ShapeAssignment.REGULAR_INITIAL(branching).shapes
    return GluingSolver(system, config, branching.signs).survey(start, branching)
