from __future__ import annotations
from typing import Dict, Sequence
import logging
import math

from flattening.models import I_PI, Flattening, TetFlattening, principal_log
from dilog.models import CSValue

from .dilogarithm import PI2_6, bloch_wigner, li2

logger = logging.getLogger(__name__)

FOUR_PI2 = 4 * math.pi ** 2



def cs_tet_raw(f:TetFlattening) -> complex:
    """4 pi^2 * CS of one flattened tetrahedron, before reduction mod 4 pi^2."""
    z = f.z
    return li2(z) + f.l1 * principal_log(1 - z) + 0.5 * f.l1 * f.l2 - 0.5 * I_PI * f.l1 - PI2_6


def cs_tet(f:TetFlattening) -> CSValue:
    return CSValue.OF(cs_tet_raw(f) / FOUR_PI2)


def cs_differential(f:TetFlattening, dl1:complex, dl2:complex) -> complex:
    return (f.l2 * dl1 - f.l1 * dl2 - I_PI * dl1) / (2 * FOUR_PI2)


def cs_total(flattening:Flattening) -> CSValue:
    total = CSValue.ZERO()
    for tet, f in enumerate(flattening.tets):
        total = total + flattening.branching.orientation_sign(tet) * cs_tet(f)

    logger.info("Chern-Simons total %s", total)

    return total


def cs_per_tet(flattening:Flattening) -> Dict[int, CSValue]:
    return {tet: cs_tet(f) for tet, f in enumerate(flattening.tets)}


def volume_from_shapes(shapes:Sequence[complex], signs:Sequence[int]) -> float:
    return -sum(sign * bloch_wigner(z) for z, sign in zip(shapes, signs))
