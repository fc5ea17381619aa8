from .run_configuration import RunConfiguration, get_run_configuration, set_run_configuration



__all__ = ["RunConfiguration", "set_run_configuration", "get_run_configuration"]
