from __future__ import annotations
from typing import Optional, Sequence



class ChernSimonsError(Exception):
    pass


class ParseError(ChernSimonsError):
    line:int
    column:int

    def __init__(self, message:str, line:int, column:int=1) -> None:
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class OrientationViolation(ChernSimonsError):
    def __init__(self, tet:int, face:int, line:Optional[int]=None) -> None:
        self.tet = tet
        self.face = face
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"orientation violation: gluing of face {face} of tetrahedron {tet} is an even permutation{where}")


class GluingError(ChernSimonsError):
    def __init__(self, tet:int, face:int, reason:str, line:Optional[int]=None) -> None:
        self.tet = tet
        self.face = face
        self.reason = reason
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"face {face} of tetrahedron {tet}: {reason}{where}")


class EdgeStarError(ChernSimonsError):
    def __init__(self, tet:int, edge:Sequence[int], reason:str) -> None:
        self.tet = tet
        self.edge = tuple(edge)
        super().__init__(f"edge {self.edge} of tetrahedron {tet}: {reason}")


class NoBranchingFound(ChernSimonsError):
    def __init__(self) -> None:
        super().__init__("no branching found")


class DegenerateShapeError(ChernSimonsError):
    def __init__(self, tet:int, value:complex) -> None:
        self.tet = tet
        self.value = value
        super().__init__(f"degenerate shape {value!r} on tetrahedron {tet}")


class NonConvergenceError(ChernSimonsError):
    def __init__(self, residual:float, iterate:Optional[Sequence[complex]]=None) -> None:
        self.residual = residual
        self.iterate = tuple(iterate) if iterate is not None else None
        super().__init__(f"gluing solver did not converge (best residual {residual:.3e})")


class SingularJacobianError(ChernSimonsError):
    def __init__(self, iterate:Sequence[complex]) -> None:
        self.iterate = tuple(iterate)
        super().__init__(f"Jacobian has rank 0 at iterate {self.iterate}")


class RoundingAmbiguity(ChernSimonsError):
    def __init__(self, edge:int, value:complex, guard:float) -> None:
        self.edge = edge
        self.value = value
        self.guard = guard
        super().__init__(f"edge {edge}: log sum {value!r} is not within {guard:g} of the lattice i*pi*Z")


class NoIntegerSolution(ChernSimonsError):
    def __init__(self, obstruction:Sequence[int], reason:str) -> None:
        self.obstruction = tuple(int(v) for v in obstruction)
        super().__init__(f"no integer flattening: {reason}, obstruction {list(self.obstruction)}")


class RelationViolationError(ChernSimonsError):
    """
    A relation that should hold (exactly or to a tolerance) does not.
    """

    def __init__(self, value:float, epsilon:Optional[float], comment:str) -> None:
        self.value = value
        self.epsilon = epsilon
        self.comment = comment
        super().__init__(str(self))


    def __str__(self) -> str:
        r = self.comment + " is violated, "
        r += "difference is %s" % self.value
        if self.epsilon is None:
            return r + " (exact values)"
        return r + " (epsilon = %s)" % self.epsilon


class DomainError(ChernSimonsError):
    def __init__(self, value:object, domain:str) -> None:
        self.value = value
        super().__init__(f"{value!r} outside domain {domain}")


class ConfigurationRejected(ChernSimonsError):
    def __init__(self, reason:str) -> None:
        self.reason = reason
        super().__init__(f"configuration rejected: {reason}")


class PathError(ChernSimonsError):
    def __init__(self, step:int, reason:str) -> None:
        self.step = step
        super().__init__(f"step {step}: {reason}")



def check_relation(value:float, epsilon:Optional[float], comment:str) -> None:
    if epsilon is None:
        if not value == 0:
            raise RelationViolationError(value, epsilon, comment)
    else:
        if not abs(value) < epsilon:
            raise RelationViolationError(value, epsilon, comment)
