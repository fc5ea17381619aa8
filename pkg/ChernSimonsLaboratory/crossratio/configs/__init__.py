from .solver_configuration import SolverConfig, get_solver_configuration, set_solver_configuration



__all__ = ["SolverConfig", "set_solver_configuration", "get_solver_configuration"]
