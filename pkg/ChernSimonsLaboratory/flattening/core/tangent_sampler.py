from __future__ import annotations
from typing import List
import random
import numpy as np
import sympy
from scipy.linalg import null_space

from triangulation.models import Branching
from flattening.models import Flattening, TangentFlattening

from .linear_forms import closed_edge_forms



def exponent_matrix(branching:Branching) -> sympy.Matrix:
    """Rational edge system, rows: closed edges, columns: (dl1_0, dl2_0, dl1_1, ...)."""
    rows = [form.lift_coefficients() for form in closed_edge_forms(branching)]
    columns = 2 * len(branching.orders)

    return sympy.Matrix(len(rows), columns, lambda i, j: rows[i][j])


def linearised_edge_matrix(flattening:Flattening) -> np.ndarray:
    """Rows: closed edges, columns: dz_t, using dl1 = dz/z and dl2 = dz/(1 - z)."""
    rows:List[List[complex]] = []
    for form in closed_edge_forms(flattening.branching):
        rows.append([float(c1) / f.z + float(c2) / (1 - f.z) for (c1, c2), f in zip(form.coefficients, flattening.tets)])

    return np.array(rows, dtype=complex).reshape(len(rows), len(flattening.tets))


def random_tangent(flattening:Flattening, seed:int) -> TangentFlattening:
    """
    Seeded random solution of the linearised edge relations.
    The kernel of the exponent system is exact; z * dl1 = (1 - z) * dl2 is then imposed on it.
    """
    tets = len(flattening.tets)
    exponents = exponent_matrix(flattening.branching)
    if exponents.rows == 0:
        kernel = [sympy.eye(2 * tets)[:, j] for j in range(2 * tets)]
    else:
        kernel = exponents.nullspace()

    zero = tuple(0j for _ in range(tets))
    if not kernel:
        return TangentFlattening(zero, zero)

    basis = np.array([[complex(v) for v in vector] for vector in kernel], dtype=complex).T
    ties = np.zeros((tets, 2 * tets), dtype=complex)
    for t, f in enumerate(flattening.tets):
        ties[t, 2 * t] = f.z
        ties[t, 2 * t + 1] = -(1 - f.z)
    coefficients = null_space(ties @ basis)
    if coefficients.shape[1] == 0:
        return TangentFlattening(zero, zero)

    rng = random.Random(seed)
    weights = np.array([(rng.randint(-5, 5) or 1) / rng.randint(1, 5) for _ in range(coefficients.shape[1])])
    vector = basis @ (coefficients @ weights)
    tangent = TangentFlattening(tuple(complex(v) for v in vector[0::2]), tuple(complex(v) for v in vector[1::2]))

    dz = np.array([d * f.z for d, f in zip(tangent.dl1, flattening.tets)], dtype=complex)
    assert np.allclose(linearised_edge_matrix(flattening) @ dz, 0, atol=1e-8 * max(1.0, float(np.abs(dz).max(initial=0.0))))

    return tangent
