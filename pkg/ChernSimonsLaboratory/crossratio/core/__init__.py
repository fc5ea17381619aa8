from .cross_ratio import configuration_cross_ratio, cross_ratio_log_derivative, expand_cross_ratio
from .gluing_equations import build_gluing_system, edge_residuals, gluing_jacobian, relation_value
from .newton_solver import GluingSolver, solve_gluing, survey_solutions



__all__ = [
    "configuration_cross_ratio", "cross_ratio_log_derivative", "expand_cross_ratio",
    "build_gluing_system", "edge_residuals", "gluing_jacobian", "relation_value",
    "GluingSolver", "solve_gluing", "survey_solutions",
]
