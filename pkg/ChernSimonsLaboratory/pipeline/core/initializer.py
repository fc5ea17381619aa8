from __future__ import annotations
from typing import Any, Dict, Optional
import json
import logging

from crossratio.configs import SolverConfig, set_solver_configuration
from pipeline.configs import RunConfiguration, get_run_configuration, set_run_configuration

logger = logging.getLogger(__name__)



class PipelineInitializer:
    @staticmethod
    def INITIALIZE_CONFIGS(config_json_path:str, overrides:Optional[Dict[str, Any]]=None) -> None:
        with open(config_json_path) as json_file:
            config:Dict[str, Dict[str, Any]] = json.load(json_file)

        run_config = config.get("run_config")
        assert run_config is not None
        PipelineInitializer.INITIALIZE_RUN(run_config, overrides or {})

        solver_config = config.get("solver_config")
        assert solver_config is not None
        PipelineInitializer.INITIALIZE_SOLVER(solver_config)


    @staticmethod
    def INITIALIZE_RUN(run_config:Dict[str, Any], overrides:Dict[str, Any]) -> None:
        tolerance = run_config["tolerance"]
        assert isinstance(tolerance, float)
        guard_band = run_config["guard_band"]
        assert isinstance(guard_band, float)
        verify_tolerance = run_config["verify_tolerance"]
        assert isinstance(verify_tolerance, float)
        branching_limit = run_config["branching_limit"]
        assert isinstance(branching_limit, int)
        strict = run_config["strict"]
        assert isinstance(strict, bool)
        five_term_samples = run_config["five_term_samples"]
        assert isinstance(five_term_samples, int)

        #SEED is left to the CSVOL_SEED variable unless given on the command line
        values:Dict[str, Any] = dict(
            TOLERANCE=tolerance,
            GUARD_BAND=guard_band,
            VERIFY_TOLERANCE=verify_tolerance,
            BRANCHING_LIMIT=branching_limit,
            STRICT=strict,
            FIVE_TERM_SAMPLES=five_term_samples,
        )
        values.update({key: value for key, value in overrides.items() if value is not None})

        run_configuration = RunConfiguration(**values)
        set_run_configuration(run_configuration)
        logger.debug("run configuration %s", run_configuration)


    @staticmethod
    def INITIALIZE_SOLVER(solver_config:Dict[str, Any]) -> None:
        max_iterations = solver_config["max_iterations"]
        assert isinstance(max_iterations, int)
        damping = solver_config["damping"]
        assert isinstance(damping, float)
        max_halvings = solver_config["max_halvings"]
        assert isinstance(max_halvings, int)
        restarts = solver_config["restarts"]
        assert isinstance(restarts, int)
        degeneracy_tolerance = solver_config["degeneracy_tolerance"]
        assert isinstance(degeneracy_tolerance, float)

        run = get_run_configuration()
        solver_configuration = SolverConfig(
            MAX_ITERATIONS=max_iterations,
            TOLERANCE=run.TOLERANCE,
            DAMPING=damping,
            MAX_HALVINGS=max_halvings,
            RESTARTS=restarts,
            SEED=run.SEED,
            DEGENERACY_TOLERANCE=degeneracy_tolerance,
        )
        set_solver_configuration(solver_configuration)
        logger.debug("solver configuration %s", solver_configuration)
