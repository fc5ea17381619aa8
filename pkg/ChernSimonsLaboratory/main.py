from __future__ import annotations
from pathlib import Path
from typing import Any, Dict, List, Optional
import argparse
import logging
import sys
from pydantic import ValidationError

from errors import (
    ChernSimonsError, DegenerateShapeError, EdgeStarError, GluingError, NoBranchingFound, NoIntegerSolution,
    NonConvergenceError, OrientationViolation, ParseError, PathError, RoundingAmbiguity, SingularJacobianError,
)
from pipeline.core import PipelineEngine, PipelineInitializer

DEFAULT_CONFIG = Path(__file__).parent / "configs" / "default.json"

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_SOLVER = 3
EXIT_INTEGER = 4
EXIT_VERIFY = 5



def exit_code_for(error:ChernSimonsError) -> int:
    if isinstance(error, (ParseError, OrientationViolation, GluingError, EdgeStarError, NoBranchingFound, PathError)):
        return EXIT_INPUT
    if isinstance(error, (NonConvergenceError, SingularJacobianError, DegenerateShapeError)):
        return EXIT_SOLVER
    if isinstance(error, (NoIntegerSolution, RoundingAmbiguity)):
        return EXIT_INTEGER

    return EXIT_VERIFY


def _read(path:Optional[str]) -> Optional[str]:
    if path is None:
        return None
    if path == "auto":
        return path
    return Path(path).read_text(encoding="utf-8")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chern-simons", description="Complex Chern-Simons invariants of ideal triangulations")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logging")
    parser.add_argument("--config", default=str(DEFAULT_CONFIG), help="Configuration JSON")
    subparsers = parser.add_subparsers(dest="command", required=True)

    info_parser = subparsers.add_parser("info", help="Parse and print the census")
    info_parser.add_argument("file", help="Triangulation (.tri)")
    info_parser.add_argument("--json", action="store_true", help="Output as JSON")

    for name, help_text in (("cs", "Compute the Chern-Simons invariant"), ("verify", "Compute and run the property suite")):
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("file", help="Triangulation (.tri)")
        sub.add_argument("--branching", default="auto", help="Branching file or 'auto'")
        sub.add_argument("--seed", type=int, default=None, help="Solver seed (falls back to CSVOL_SEED)")
        sub.add_argument("--tol", type=float, default=None, help="Gluing residual tolerance")
        sub.add_argument("--paths", default=None, help="Peripheral paths file")
        sub.add_argument("--shapes", default=None, help="Initial shapes file")
        sub.add_argument("--json", action="store_true", help="Output as JSON")
        if name == "verify":
            sub.add_argument("--flattening", default=None, help="Flattening file (skips the integer solve)")

    return parser


def run(argv:Optional[List[str]]=None) -> int:
    args = build_parser().parse_args(argv)
    level = logging.WARNING if args.verbose == 0 else (logging.INFO if args.verbose == 1 else logging.DEBUG)
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s", force=True)

    overrides:Dict[str, Any] = {"SEED": getattr(args, "seed", None), "TOLERANCE": getattr(args, "tol", None)}
    try:
        PipelineInitializer.INITIALIZE_CONFIGS(args.config, overrides)
        engine = PipelineEngine(
            Path(args.file).read_text(encoding="utf-8"),
            branching_text=_read(getattr(args, "branching", None)),
            paths_text=_read(getattr(args, "paths", None)),
            shapes_text=_read(getattr(args, "shapes", None)),
            flattening_text=_read(getattr(args, "flattening", None)),
        )
    except (OSError, UnicodeDecodeError, ValidationError) as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_INPUT

    code = EXIT_OK
    try:
        if args.command == "info":
            engine.info()
        elif args.command == "cs":
            engine.cs()
        else:
            engine.verify()
    except ChernSimonsError as error:
        code = exit_code_for(error)
        engine.report.status = "error"
        engine.report.message = str(error)
        print(f"error: {error}", file=sys.stderr)
    engine.report.exit_code = code

    if code == EXIT_OK:
        _print_summary(engine, args.command)
    if args.json:
        sys.stdout.write(engine.report.to_json())

    return code


def _print_summary(engine:PipelineEngine, command:str) -> None:
    report = engine.report
    print(engine.census_line(), file=sys.stderr)
    if command == "info":
        return

    total = report.cs_total
    print(f"CS = {total['real']:.12f} {total['imag']:+.12f}i (mod 1)", file=sys.stderr)
    print(f"volume = {report.volume:.12f}", file=sys.stderr)
    for name, (re_part, im_part) in report.peripheral.items():
        print(f"log holonomy {name} = {re_part:.12f} {im_part:+.12f}i", file=sys.stderr)
    if command == "verify":
        print(f"{len(report.residuals)} relation(s) checked, all passed", file=sys.stderr)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
