from __future__ import annotations
from typing import Callable, Optional, Sequence, Tuple
import cmath
import logging

from errors import ConfigurationRejected, DomainError
from flattening.models import I_PI, TetFlattening, principal_log
from dilog.models import CSValue

from .chern_simons import cs_tet
from .dilogarithm import H

logger = logging.getLogger(__name__)

Point = Optional[complex] #None is infinity
RELATION_TOLERANCE = 1e-9



def five_term_residual(u:float, v:float) -> float:
    if not 0 < v < u < 1:
        raise DomainError((u, v), "0 < v < u < 1")

    return H(u) - H(v) + H(v / u) - H((1 - 1 / u) / (1 - 1 / v)) + H((1 - u) / (1 - v))


class FiveTermConfiguration:
    """
    Five points of the Riemann sphere with a global order. The sub-tetrahedron omitting
    point i carries the flattening built from the edge logarithms lambda(a, b).
    """

    def __init__(self, points:Sequence[Point], order:Optional[Sequence[int]]=None) -> None:
        if len(points) != 5:
            raise ConfigurationRejected(f"expected 5 points, got {len(points)}")
        self.points = tuple(None if p is None else complex(p) for p in points)
        self.order = tuple(order) if order is not None else (0, 1, 2, 3, 4)
        if sorted(self.order) != [0, 1, 2, 3, 4]:
            raise ConfigurationRejected(f"{list(self.order)} is not an ordering of the five points")
        self.__rank = {point: rank for rank, point in enumerate(self.order)}

        for index, point in enumerate(self.points):
            if point is None and index != 0:
                raise ConfigurationRejected("infinity is only allowed as the first point")
            if point is not None and not cmath.isfinite(point):
                raise ConfigurationRejected(f"point {index} is not finite")
        if self.points[0] is None and self.order[0] != 0:
            raise ConfigurationRejected("infinity must come first in the order")
        finite = [p for p in self.points if p is not None]
        for i in range(len(finite)):
            for j in range(i + 1, len(finite)):
                if abs(finite[i] - finite[j]) < 1e-12:
                    raise ConfigurationRejected("points are not distinct")


    def edge_log(self, a:int, b:int) -> complex:
        if self.__rank[a] < self.__rank[b]:
            return self.edge_log(b, a) + I_PI
        if self.points[b] is None:
            return 0j

        return principal_log(self.points[a] - self.points[b]) #type: ignore[operator]


    def sub_tetrahedron(self, omitted:int) -> TetFlattening:
        x, y, z, t = sorted((p for p in range(5) if p != omitted), key=lambda p: self.__rank[p])
        lam:Callable[[int, int], complex] = self.edge_log
        l1 = lam(t, y) + lam(z, x) - lam(z, y) - lam(t, x)
        l2 = lam(y, z) + lam(t, x) - lam(t, z) - lam(y, x)
        l3 = lam(z, t) + lam(y, x) - lam(y, t) - lam(z, x)
        if abs(l1 + l2 + l3 - I_PI) > RELATION_TOLERANCE:
            raise ConfigurationRejected(f"edge logarithms of the tetrahedron without point {omitted} do not sum to i*pi")

        shape = cmath.exp(l1)
        if abs(shape) < 1e-12 or abs(shape - 1) < 1e-12:
            raise ConfigurationRejected(f"tetrahedron without point {omitted} is degenerate")

        return TetFlattening(shape, l1, l2)


    def sub_tetrahedra(self) -> Tuple[TetFlattening, ...]:
        return tuple(self.sub_tetrahedron(i) for i in range(5))


    def residual(self) -> complex:
        total = CSValue.ZERO()
        for i, f in enumerate(self.sub_tetrahedra()):
            total = total + (-1) ** i * cs_tet(f)

        return total.centred



def five_term_config_residual(points:Sequence[Point], order:Optional[Sequence[int]]=None) -> complex:
    return FiveTermConfiguration(points, order).residual()
