from .flattening import Flattening, expand_flattening
from .linear_form import LinearForm
from .tangent_flattening import TangentFlattening
from .tet_flattening import I_PI, TWO_PI_I, TetFlattening, principal_log, region_bit



__all__ = [
    "Flattening", "expand_flattening", "LinearForm", "TangentFlattening",
    "I_PI", "TWO_PI_I", "TetFlattening", "principal_log", "region_bit",
]
