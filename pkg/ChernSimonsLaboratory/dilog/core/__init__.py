from .chern_simons import FOUR_PI2, cs_differential, cs_per_tet, cs_tet, cs_tet_raw, cs_total, volume_from_shapes
from .dilogarithm import H, PI2_6, bloch_wigner, li2, rogers_R
from .five_term import FiveTermConfiguration, five_term_config_residual, five_term_residual
from .path_integration import PathIntegrator, integrate_cs_along_path



__all__ = [
    "FOUR_PI2", "cs_differential", "cs_per_tet", "cs_tet", "cs_tet_raw", "cs_total", "volume_from_shapes",
    "H", "PI2_6", "bloch_wigner", "li2", "rogers_R",
    "FiveTermConfiguration", "five_term_config_residual", "five_term_residual",
    "PathIntegrator", "integrate_cs_along_path",
]
