from __future__ import annotations
import json
import math
import pytest
from pydantic import ValidationError

from main import DEFAULT_CONFIG, EXIT_INPUT, EXIT_INTEGER, EXIT_OK, EXIT_SOLVER, EXIT_VERIFY, exit_code_for, run
from errors import (
    ConfigurationRejected, DegenerateShapeError, NoIntegerSolution, ParseError, RelationViolationError, RoundingAmbiguity,
)
from crossratio.configs import get_solver_configuration
from flattening.core import serialize_flat
from pipeline.configs import RunConfiguration, get_run_configuration
from pipeline.core import PipelineEngine, PipelineInitializer
from pipeline.models import render_json
from dilog.models import CSValue

from conftest import FIG8_VOLUME, fixture_text



def _run_json(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, json.loads(captured.out), captured


@pytest.fixture
def fig8_files(fixtures_dir):
    return str(fixtures_dir / "fig8.tri"), str(fixtures_dir / "fig8.paths")


def test_render_json_floats():
    assert render_json(0.1) == "0.10000000000000001"
    assert render_json(2.0) == "2.0"
    assert render_json(1e-20) == "9.9999999999999995e-21"
    assert render_json(float("nan")) == "null"
    assert render_json({"a": [1, True, None], "b": {}}) == '{\n  "a": [1, true, null],\n  "b": {}\n}'


def test_initializer_reads_the_default_configuration(monkeypatch):
    monkeypatch.delenv("CSVOL_SEED", raising=False)
    PipelineInitializer.INITIALIZE_CONFIGS(str(DEFAULT_CONFIG), {"TOLERANCE": 1e-9, "SEED": None})
    run_config = get_run_configuration()
    assert run_config.TOLERANCE == 1e-9
    assert run_config.SEED == 0
    assert run_config.STRICT
    solver_config = get_solver_configuration()
    assert solver_config.TOLERANCE == 1e-9
    assert solver_config.MAX_ITERATIONS == 100
    assert solver_config.DAMPING == 0.5


def test_seed_environment_fallback(monkeypatch):
    monkeypatch.setenv("CSVOL_SEED", "7")
    assert RunConfiguration().SEED == 7
    PipelineInitializer.INITIALIZE_CONFIGS(str(DEFAULT_CONFIG), {"SEED": 3})
    assert get_run_configuration().SEED == 3
    assert get_solver_configuration().SEED == 3


def test_run_configuration_is_frozen():
    config = RunConfiguration()
    with pytest.raises(ValidationError):
        config.SEED = 5 #type: ignore[misc]


def test_exit_code_mapping():
    assert exit_code_for(ParseError("bad", 1)) == EXIT_INPUT
    assert exit_code_for(DegenerateShapeError(0, 1 + 0j)) == EXIT_SOLVER
    assert exit_code_for(NoIntegerSolution([1], "odd")) == EXIT_INTEGER
    assert exit_code_for(RoundingAmbiguity(0, 0.1j, 1e-6)) == EXIT_INTEGER
    assert exit_code_for(RelationViolationError(1.0, 1e-10, "edge")) == EXIT_VERIFY
    assert exit_code_for(ConfigurationRejected("points")) == EXIT_VERIFY


def test_info(capsys, fig8_files):
    assert run(["info", fig8_files[0]]) == EXIT_OK
    assert "2 tetrahedra, 2 edges, 1 torus cusp(s)" in capsys.readouterr().err

    code, report, _ = _run_json(capsys, ["info", fig8_files[0], "--json"])
    assert code == EXIT_OK
    assert report["census"]["torus_cusps"] == 1
    assert report["census"]["boundary_euler_characteristics"] == [0]


def test_cs_of_the_figure_eight(capsys, monkeypatch, fig8_files):
    monkeypatch.delenv("CSVOL_SEED", raising=False)
    tri, paths = fig8_files
    code, report, captured = _run_json(capsys, ["cs", tri, "--paths", paths, "--json"])
    assert code == EXIT_OK
    assert report["schema_version"] == "1.0"
    assert report["status"] == "ok"
    assert report["branching_orders"] == [[0, 2, 3, 1], [0, 3, 2, 1]]
    assert report["geometric"] is True
    assert report["volume"] == pytest.approx(FIG8_VOLUME, abs=1e-10)

    real, imag = report["cs_total"]["real"], report["cs_total"]["imag"]
    assert abs(abs(imag) * 4 * math.pi ** 2 - FIG8_VOLUME) < 1e-8
    assert abs(real - round(real)) < 1e-8
    assert set(report["peripheral"]) == {"alpha", "beta"}
    assert all(row["passed"] for row in report["residuals"])
    kinds = {row["kind"] for row in report["residuals"]}
    assert {"gluing", "completeness", "flattening", "square", "face hexagon", "vertex hexagon", "edge star", "peripheral"} <= kinds
    assert "CS = " in captured.err


def test_invariant_does_not_depend_on_the_seed(capsys, fig8_files):
    values = []
    for seed in range(10):
        code, report, _ = _run_json(capsys, ["cs", fig8_files[0], "--seed", str(seed), "--json"])
        assert code == EXIT_OK
        values.append((CSValue.OF(complex(report["cs_total"]["real"], report["cs_total"]["imag"])), report["volume"]))
    first, volume = values[0]
    for value, other_volume in values[1:]:
        assert value.distance(first) < 1e-10
        assert other_volume == pytest.approx(volume, abs=1e-12)


def test_cs_output_is_deterministic(capsys, fig8_files):
    tri, paths = fig8_files
    run(["cs", tri, "--paths", paths, "--json"])
    first = capsys.readouterr().out
    run(["cs", tri, "--paths", paths, "--json"])
    assert capsys.readouterr().out == first


def test_seed_reaches_the_report(capsys, monkeypatch, fig8_files):
    monkeypatch.setenv("CSVOL_SEED", "7")
    _, report, _ = _run_json(capsys, ["cs", fig8_files[0], "--json"])
    assert report["seed"] == 7
    _, report, _ = _run_json(capsys, ["cs", fig8_files[0], "--seed", "3", "--json"])
    assert report["seed"] == 3


def test_verify_the_figure_eight(capsys, fig8_files):
    tri, paths = fig8_files
    code, report, captured = _run_json(capsys, ["verify", tri, "--paths", paths, "--json"])
    assert code == EXIT_OK
    kinds = {row["kind"] for row in report["residuals"]}
    assert {"gluing", "completeness", "flattening", "square", "edge star", "peripheral", "five-term", "derivative"} <= kinds
    assert "all passed" in captured.err


@pytest.mark.parametrize("name", ["even_perm.tri", "malformed.tri", "duplicate.tri", "partial.tri"])
def test_bad_triangulations_exit_with_input_errors(capsys, fixtures_dir, name):
    code, report, captured = _run_json(capsys, ["cs", str(fixtures_dir / name), "--json"])
    assert code == EXIT_INPUT
    assert report["status"] == "error"
    assert report["exit_code"] == EXIT_INPUT
    assert "error:" in captured.err


def test_missing_file(capsys, tmp_path):
    assert run(["cs", str(tmp_path / "nowhere.tri")]) == EXIT_INPUT


def test_bad_branching_file(capsys, tmp_path, fig8_files):
    branching = tmp_path / "fig8.branch"
    branching.write_text("branch 0 0 1\n")
    assert run(["cs", fig8_files[0], "--branching", str(branching)]) == EXIT_INPUT


def test_degenerate_solution_exits_with_solver_error(capsys, fixtures_dir):
    assert run(["cs", str(fixtures_dir / "self_glued.tri")]) == EXIT_SOLVER


def test_loose_tolerance_leaves_the_lattice(capsys, tmp_path, fig8_files):
    shapes = tmp_path / "near.shapes"
    shapes.write_text("shape 0 0.5 -0.866\nshape 1 0.5 0.866\n")
    code, report, _ = _run_json(capsys, ["cs", fig8_files[0], "--shapes", str(shapes), "--tol", "1e-2", "--json"])
    assert code == EXIT_INTEGER
    assert report["solver"]["iterations"] == 0


def test_verify_with_a_flattening_file(capsys, tmp_path, fig8_files, fig8_flattening):
    tri, paths = fig8_files
    good = tmp_path / "good.flat"
    good.write_text(serialize_flat(fig8_flattening))
    assert run(["verify", tri, "--paths", paths, "--flattening", str(good)]) == EXIT_OK

    (p0, q0, _), (p1, q1, _) = fig8_flattening.lifts
    bad = tmp_path / "bad.flat"
    bad.write_text(serialize_flat(fig8_flattening.with_lifts(((p0 + 1, q0), (p1, q1)))))
    code, report, _ = _run_json(capsys, ["verify", tri, "--paths", paths, "--flattening", str(bad), "--json"])
    assert code == EXIT_VERIFY
    assert "'edge star 0 flattening sum'" in report["message"]
    failing = [row for row in report["residuals"] if not row["passed"]]
    assert {"flattening", "edge star"} <= {row["kind"] for row in failing}
    assert "edge 0 (-Id)" in {row["relation"] for row in failing}


def test_cs_checks_the_cocycle(monkeypatch, fig8_flattening):
    monkeypatch.delenv("CSVOL_SEED", raising=False)
    PipelineInitializer.INITIALIZE_CONFIGS(str(DEFAULT_CONFIG))
    (p0, q0, _), (p1, q1, _) = fig8_flattening.lifts
    engine = PipelineEngine(
        fixture_text("fig8.tri"),
        paths_text=fixture_text("fig8.paths"),
        flattening_text=serialize_flat(fig8_flattening.with_lifts(((p0 + 1, q0), (p1, q1)))),
    )
    with pytest.raises(RelationViolationError, match="edge star 0"):
        engine.cs()
    failing = {row.kind for row in engine.report.residuals if not row.passed}
    assert "edge star" in failing
    assert not {"square", "face hexagon", "vertex hexagon"} & failing


def test_undecodable_triangulation(capsys, tmp_path):
    path = tmp_path / "binary.tri"
    path.write_bytes(b"\xff\xfe tri 1\n")
    assert run(["info", str(path)]) == EXIT_INPUT
    assert "error:" in capsys.readouterr().err


def test_rejected_configuration_value(capsys, fig8_files):
    assert run(["cs", fig8_files[0], "--tol", "0"]) == EXIT_INPUT
    assert "error:" in capsys.readouterr().err


def test_empty_triangulation(capsys, fixtures_dir):
    code, report, _ = _run_json(capsys, ["verify", str(fixtures_dir / "empty.tri"), "--json"])
    assert code == EXIT_OK
    assert report["cs_total"] == {"real": 0.0, "imag": 0.0}
    assert report["volume"] == 0.0
    assert report["tets"] == []


def test_engine_report_is_filled_in_stages(monkeypatch):
    monkeypatch.delenv("CSVOL_SEED", raising=False)
    PipelineInitializer.INITIALIZE_CONFIGS(str(DEFAULT_CONFIG))
    engine = PipelineEngine(fixture_text("fig8.tri"), paths_text=fixture_text("fig8.paths"))
    report = engine.info()
    assert report.tets == []
    assert engine.census_line() == "2 tetrahedra, 2 edges, 1 torus cusp(s)"

    report = engine.cs()
    assert [record.sign for record in report.tets] == [1, -1]
    assert report.solver.chosen_start == 0
    assert len(report.input_digest) == 64
