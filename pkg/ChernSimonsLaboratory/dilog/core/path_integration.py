from __future__ import annotations
from typing import Callable, List, Optional, Tuple
import cmath
import logging
import math
import numpy as np
from scipy.integrate import solve_ivp

from flattening.models import I_PI, TWO_PI_I, TetFlattening
from dilog.models import CSValue

from .chern_simons import FOUR_PI2
from .dilogarithm import H

logger = logging.getLogger(__name__)

LOOP_RADIUS = 0.5
CLEARANCE = 0.05
WAYPOINTS:Tuple[Optional[complex], ...] = (None, 0.5 - 2j, 0.5 + 2j, -1 + 1j, 2 + 1j, -1 - 1j, 2 - 1j)

Segment = Tuple[Callable[[float], complex], Callable[[float], complex]] #z(s), z'(s) on s in [0, 1]



def _line(a:complex, b:complex) -> Segment:
    return (lambda s: a + (b - a) * s, lambda s: b - a)


def _loops(centre:complex, start:complex, turns:int) -> Segment:
    offset = start - centre
    omega = TWO_PI_I * turns
    return (lambda s: centre + offset * cmath.exp(omega * s), lambda s: offset * omega * cmath.exp(omega * s))


def _distance_to_segment(point:complex, a:complex, b:complex) -> float:
    direction = b - a
    if direction == 0:
        return abs(point - a)
    t = max(0.0, min(1.0, ((point - a) * direction.conjugate()).real / abs(direction) ** 2))
    return abs(point - (a + t * direction))


def _clear(a:complex, b:complex) -> bool:
    return all(_distance_to_segment(p, a, b) > CLEARANCE for p in (0j, 1 + 0j))


class PathIntegrator:
    """
    Integrates dF = (l2 dl1 - l1 dl2 - i*pi dl1) / 2 with dl1 = dz/z, dl2 = dz/(1 - z),
    starting on the branch z = 1/u where F = 4 pi^2 H(u). Loops around 0 and 1 reach the
    requested lifts (p, q).
    """

    def __init__(self, base_u:float=0.5, rtol:float=1e-12, atol:float=1e-14) -> None:
        assert 0 < base_u < 1
        self.__base_u = base_u
        self.__rtol = rtol
        self.__atol = atol


    def initial_state(self) -> np.ndarray:
        u = self.__base_u
        l1 = -math.log(u)
        l2 = math.log(u / (1 - u)) + I_PI
        return np.array([FOUR_PI2 * H(u), l1, l2], dtype=complex)


    def integrate(self, target:TetFlattening) -> CSValue:
        base = complex(1 / self.__base_u)
        a, b = -0.5j, 1 - 0.5j
        tail = self.__tail(b, target.z)

        trial = self.__run([_line(base, a), _line(a, b)] + tail, self.initial_state())
        n0 = round(((target.l1 - trial[1]) / TWO_PI_I).real)
        n1 = -round(((target.l2 - trial[2]) / TWO_PI_I).real)

        segments = [_line(base, a)]
        if n0:
            segments.append(_loops(0j, a, n0))
        segments.append(_line(a, b))
        if n1:
            segments.append(_loops(1 + 0j, b, n1))
        final = self.__run(segments + tail, self.initial_state())

        assert abs(final[1] - target.l1) < 1e-6 and abs(final[2] - target.l2) < 1e-6
        logger.debug("integrated to z=%r with %d loop(s) around 0 and %d around 1", target.z, n0, n1)

        return CSValue.OF(final[0] / FOUR_PI2)


    @staticmethod
    def __tail(start:complex, target:complex) -> List[Segment]:
        for waypoint in WAYPOINTS:
            if waypoint is None:
                if _clear(start, target):
                    return [_line(start, target)]
            elif _clear(start, waypoint) and _clear(waypoint, target):
                return [_line(start, waypoint), _line(waypoint, target)]

        raise AssertionError(f"no clear route to {target!r}")


    def __run(self, segments:List[Segment], state:np.ndarray) -> np.ndarray:
        for z_of, dz_of in segments:
            def rhs(s:float, y:np.ndarray, z_of:Callable[[float], complex]=z_of, dz_of:Callable[[float], complex]=dz_of) -> np.ndarray:
                z, dz = z_of(s), dz_of(s)
                _, l1, l2 = y
                dl1 = dz / z
                dl2 = dz / (1 - z)
                return np.array([0.5 * (l2 * dl1 - l1 * dl2 - I_PI * dl1), dl1, dl2], dtype=complex)

            solution = solve_ivp(rhs, (0.0, 1.0), state, method="DOP853", rtol=self.__rtol, atol=self.__atol)
            assert solution.success, solution.message
            state = solution.y[:, -1]

        return state



def integrate_cs_along_path(f:TetFlattening, base_u:float=0.5) -> CSValue:
    return PathIntegrator(base_u).integrate(f)
