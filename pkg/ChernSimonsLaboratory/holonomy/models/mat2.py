from __future__ import annotations
import cmath
import numpy as np

Mat2 = np.ndarray

M1:Mat2 = np.array([[0, -1j], [-1j, 0]], dtype=complex)
M2:Mat2 = np.array([[-1j, 1j], [0, 1j]], dtype=complex)
IDENTITY:Mat2 = np.eye(2, dtype=complex)



def M3(L:complex) -> Mat2:
    return np.array([[cmath.exp(-L / 2), 0], [0, cmath.exp(L / 2)]], dtype=complex)


def inverse(matrix:Mat2) -> Mat2:
    #determinant one
    return np.array([[matrix[1, 1], -matrix[0, 1]], [-matrix[1, 0], matrix[0, 0]]], dtype=complex)


def is_unimodular(matrix:Mat2, tolerance:float=1e-10) -> bool:
    return abs(np.linalg.det(matrix) - 1) < tolerance


def deviation(matrix:Mat2, target:Mat2=IDENTITY) -> float:
    return float(np.max(np.abs(matrix - target)))


def projective_deviation(matrix:Mat2, target:Mat2=IDENTITY) -> float:
    return min(deviation(matrix, target), deviation(matrix, -target))


def projectivise(matrix:Mat2) -> Mat2:
    """Representative scaled so the first nonzero entry is 1."""
    flat = matrix.flatten()
    pivot = next(v for v in flat if abs(v) > 1e-12)
    return matrix / pivot
