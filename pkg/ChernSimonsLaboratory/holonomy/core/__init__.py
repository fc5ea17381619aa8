from .cell_verifier import CELLS, verify_cells
from .cocycle_builder import ORDERINGS, build_lifted_cocycle, edge_label
from .fundamental_group import FundamentalGroupBuilder, fundamental_representation
from .path_holonomy import path_holonomy, step_label
from .peripheral import peripheral_form, peripheral_log_holonomy



__all__ = [
    "CELLS", "verify_cells", "ORDERINGS", "build_lifted_cocycle", "edge_label",
    "FundamentalGroupBuilder", "fundamental_representation",
    "path_holonomy", "step_label", "peripheral_form", "peripheral_log_holonomy",
]
