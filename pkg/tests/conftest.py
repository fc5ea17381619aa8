from __future__ import annotations
from pathlib import Path
from typing import List
import cmath
import math
import pytest

from triangulation.core import find_branchings, parse_paths, parse_triangulation
from triangulation.models import AbstractTriangulation, BoundaryPath, Branching
from crossratio.configs import SolverConfig
from crossratio.core import GluingSolver, build_gluing_system
from crossratio.models import ShapeAssignment
from flattening.core import solve_flattening
from flattening.models import Flattening

FIXTURES = Path(__file__).parent / "fixtures"

#Complete hyperbolic structure of the figure-eight knot complement under the default branching
FIG8_SHAPES = (cmath.exp(-1j * math.pi / 3), cmath.exp(1j * math.pi / 3))
FIG8_VOLUME = 2.029883212819307



def fixture_text(name:str) -> str:
    return (FIXTURES / name).read_text()


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def fig8() -> AbstractTriangulation:
    return parse_triangulation(fixture_text("fig8.tri"))


@pytest.fixture(scope="session")
def fig8_branching(fig8:AbstractTriangulation) -> Branching:
    return find_branchings(fig8, 1)[0]


@pytest.fixture(scope="session")
def fig8_paths() -> List[BoundaryPath]:
    return parse_paths(fixture_text("fig8.paths"))


@pytest.fixture(scope="session")
def fig8_shapes(fig8_branching:Branching, fig8_paths:List[BoundaryPath]) -> ShapeAssignment:
    system = build_gluing_system(fig8_branching, fig8_paths)
    solver = GluingSolver(system, SolverConfig(), fig8_branching.signs)
    return solver.solve(ShapeAssignment.REGULAR_INITIAL(fig8_branching).shapes)


@pytest.fixture(scope="session")
def fig8_flattening(fig8_branching:Branching, fig8_shapes:ShapeAssignment, fig8_paths:List[BoundaryPath]) -> Flattening:
    return solve_flattening(fig8_branching, fig8_shapes.shapes, fig8_paths)
