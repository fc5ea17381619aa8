from .gluing_system import Factor, GluingRelation, GluingSystem, RelationKind
from .shape_assignment import DEGENERACY_TOLERANCE, ShapeAssignment, check_shape, parse_shapes, serialize_shapes
from .solver_trace import SolverTrace, StartRecord



__all__ = [
    "Factor", "GluingRelation", "GluingSystem", "RelationKind",
    "DEGENERACY_TOLERANCE", "ShapeAssignment", "check_shape", "parse_shapes", "serialize_shapes",
    "SolverTrace", "StartRecord",
]
