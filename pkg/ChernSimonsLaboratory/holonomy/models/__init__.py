from .cell_report import CellReport
from .fundamental_representation import FundamentalRepresentation
from .lifted_cocycle import LiftedCocycle
from .mat2 import IDENTITY, M1, M2, M3, Mat2, deviation, inverse, is_unimodular, projective_deviation, projectivise



__all__ = [
    "CellReport", "FundamentalRepresentation", "LiftedCocycle",
    "IDENTITY", "M1", "M2", "M3", "Mat2", "deviation", "inverse", "is_unimodular", "projective_deviation", "projectivise",
]
