from __future__ import annotations
from pydantic_settings import BaseSettings, SettingsConfigDict
from typing import Optional



class RunConfiguration(BaseSettings):
    SEED:int = 0
    TOLERANCE:float = 1e-12 #gluing residual target
    GUARD_BAND:float = 1e-6 #distance of an edge log sum to i*pi*Z accepted when rounding
    VERIFY_TOLERANCE:float = 1e-10
    BRANCHING_LIMIT:int = 64
    STRICT:bool = True
    FIVE_TERM_SAMPLES:int = 20
    model_config = SettingsConfigDict(frozen=True, env_prefix="CSVOL_")


__RUN_CONFIGURATION:Optional[RunConfiguration] = None


def set_run_configuration(run_configuration:RunConfiguration) -> None:
    global __RUN_CONFIGURATION
    __RUN_CONFIGURATION = run_configuration


def get_run_configuration() -> RunConfiguration:
    assert __RUN_CONFIGURATION is not None

    return __RUN_CONFIGURATION
