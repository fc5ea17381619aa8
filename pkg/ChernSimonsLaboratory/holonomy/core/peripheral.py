from __future__ import annotations

from triangulation.core import check_path
from triangulation.models import Branching, BoundaryPath
from flattening.core import path_form
from flattening.models import Flattening, LinearForm



def peripheral_form(branching:Branching, loop:BoundaryPath) -> LinearForm:
    check_path(branching.triangulation, loop, closed=True)
    return path_form(branching, loop)


def peripheral_log_holonomy(flattening:Flattening, loop:BoundaryPath) -> complex:
    """Logarithm of the upper left entry of the loop holonomy."""
    return peripheral_form(flattening.branching, loop).evaluate(flattening.tets)
