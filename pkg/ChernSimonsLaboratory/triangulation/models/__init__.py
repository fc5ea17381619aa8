from .abstract_triangulation import AbstractTriangulation, Gluing
from .boundary_path import BoundaryPath, PathStep
from .branching import Branching
from .edge_class import EdgeClass, StarEntry
from .ordering_class import EdgeType, Ordering, OrderingClass, ORDERING_TABLE, classify, permutation_parity, swap



__all__ = [
    "AbstractTriangulation", "Gluing", "BoundaryPath", "PathStep", "Branching", "EdgeClass", "StarEntry",
    "EdgeType", "Ordering", "OrderingClass", "ORDERING_TABLE", "classify", "permutation_parity", "swap",
]
