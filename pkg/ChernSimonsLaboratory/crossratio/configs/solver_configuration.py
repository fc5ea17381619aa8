from __future__ import annotations
from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict
from typing import Optional



class SolverConfig(BaseSettings):
    MAX_ITERATIONS:int = 100
    TOLERANCE:float = 1e-12
    DAMPING:float = 0.5 #step scale applied on each halving
    MAX_HALVINGS:int = 30
    RESTARTS:int = 8
    SEED:int = 0
    DEGENERACY_TOLERANCE:float = 1e-10
    model_config = SettingsConfigDict(frozen=True, env_prefix="CSVOL_SOLVER_")


    @field_validator("TOLERANCE", "DEGENERACY_TOLERANCE")
    @classmethod
    def check_positive(cls, value:float) -> float:
        if not value > 0:
            raise ValueError("must be positive")
        return value


    @field_validator("MAX_ITERATIONS")
    @classmethod
    def check_at_least_one(cls, value:int) -> int:
        if value < 1:
            raise ValueError("must be at least 1")
        return value


    @field_validator("DAMPING")
    @classmethod
    def check_open_unit(cls, value:float) -> float:
        if not 0 < value < 1:
            raise ValueError("must lie in (0, 1)")
        return value


__SOLVER_CONFIGURATION:Optional[SolverConfig] = None


def set_solver_configuration(solver_configuration:SolverConfig) -> None:
    global __SOLVER_CONFIGURATION
    __SOLVER_CONFIGURATION = solver_configuration


def get_solver_configuration() -> SolverConfig:
    assert __SOLVER_CONFIGURATION is not None

    return __SOLVER_CONFIGURATION
