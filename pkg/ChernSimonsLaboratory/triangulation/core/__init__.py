from .boundary_census import BoundaryCensus, UnionFind, boundary_components, torus_cusp_count
from .branching_search import BranchingSearch, branching_from_directions, find_branchings, parse_branching, serialize_branching
from .edge_star_walker import EdgeStarWalker, edge_classes, edge_lookup
from .path_checker import check_path, same_vertex
from .path_parser import parse_paths, serialize_paths
from .tri_parser import TriangulationParser, parse_triangulation, serialize_triangulation



__all__ = [
    "BoundaryCensus", "UnionFind", "boundary_components", "torus_cusp_count",
    "BranchingSearch", "branching_from_directions", "find_branchings", "parse_branching", "serialize_branching",
    "EdgeStarWalker", "edge_classes", "edge_lookup",
    "check_path", "same_vertex", "parse_paths", "serialize_paths",
    "TriangulationParser", "parse_triangulation", "serialize_triangulation",
]
