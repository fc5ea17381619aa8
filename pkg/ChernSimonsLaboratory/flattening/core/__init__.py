from .flat_io import parse_flat, serialize_flat
from .flattening_solver import GUARD_BAND, FlatteningSolver, solve_flattening
from .integer_lattice import exgcd, normal_form, solve_integer_system
from .linear_forms import closed_edge_forms, edge_flattening_form, edge_flattening_residuals, ordering_form, path_form, role_form
from .tangent_sampler import exponent_matrix, linearised_edge_matrix, random_tangent



__all__ = [
    "parse_flat", "serialize_flat",
    "GUARD_BAND", "FlatteningSolver", "solve_flattening",
    "exgcd", "normal_form", "solve_integer_system",
    "closed_edge_forms", "edge_flattening_form", "edge_flattening_residuals", "ordering_form", "path_form", "role_form",
    "exponent_matrix", "linearised_edge_matrix", "random_tangent",
]
