from __future__ import annotations
from typing import Tuple
import numpy as np

from errors import NoIntegerSolution



def exgcd(a:int, b:int) -> np.ndarray:
    """
    Unimodular 2x2 integer matrix M with M @ [a, b] = [gcd(a, b), 0].
    When a divides b the upper right entry is 0.
    """
    if a == 0 and b == 0:
        return np.eye(2, dtype=object)

    a_sign = -1 if a < 0 else 1
    b_sign = -1 if b < 0 else 1
    a, b = a * a_sign, b * b_sign

    #Euclid on [b, a] with the row operations tracked in the augmented identity
    work = np.array([[b, 0, 1], [a, 1, 0]], dtype=object)
    while work[1, 0] != 0:
        quotient = work[0, 0] // work[1, 0]
        work[0] -= quotient * work[1]
        work = work[::-1].copy()

    g = work[0, 0]
    matrix = work[:, 1:] * np.array([a_sign, b_sign], dtype=object)
    if g != 0:
        matrix[1] = np.array([-b_sign * b // g, a_sign * a // g], dtype=object)

    return matrix


def inverse_unimodular_2x2(matrix:np.ndarray) -> np.ndarray:
    assert matrix[0, 0] * matrix[1, 1] - matrix[0, 1] * matrix[1, 0] == 1
    return np.array([[matrix[1, 1], -matrix[0, 1]], [-matrix[1, 0], matrix[0, 0]]], dtype=object)


def normal_form(matrix:np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """
    Diagonal reduction A = S @ D @ T with S, T unimodular (no divisibility chain on D).
    Returns (S, D, T, S^-1, T^-1), all object-dtype integer matrices.
    """
    original = matrix.astype(object)
    D = original.copy()
    rows, cols = D.shape
    S, T = np.eye(rows, dtype=object), np.eye(cols, dtype=object)
    S_inv, T_inv = S.copy(), T.copy()

    def clear_row(i:int) -> bool:
        if (D[i, i + 1:] == 0).all():
            return False
        for j in range(i + 1, cols):
            M = exgcd(D[i, i], D[i, j]).T
            D[:, [i, j]] = D[:, [i, j]] @ M
            T[[i, j]] = inverse_unimodular_2x2(M) @ T[[i, j]]
            T_inv[:, [i, j]] = T_inv[:, [i, j]] @ M
        return True

    def clear_column(i:int) -> bool:
        if (D[i + 1:, i] == 0).all():
            return False
        for j in range(i + 1, rows):
            M = exgcd(D[i, i], D[j, i])
            D[[i, j]] = M @ D[[i, j]]
            S[:, [i, j]] = S[:, [i, j]] @ inverse_unimodular_2x2(M)
            S_inv[[i, j]] = M @ S_inv[[i, j]]
        return True

    for i in range(min(rows, cols)):
        clear_column(i)
        while clear_row(i) and clear_column(i):
            pass

    assert (S @ D @ T == original).all()
    assert (S @ S_inv == np.eye(rows, dtype=object)).all()
    assert (T_inv @ T == np.eye(cols, dtype=object)).all()

    return S, D, T, S_inv, T_inv


def solve_integer_system(matrix:np.ndarray, rhs:np.ndarray) -> np.ndarray:
    """Some integer x with matrix @ x == rhs; free coordinates are set to 0."""
    rows, cols = matrix.shape
    if rows == 0:
        return np.zeros(cols, dtype=object)
    if cols == 0:
        if any(v != 0 for v in rhs):
            raise NoIntegerSolution(list(rhs), "no unknowns but a nonzero right-hand side")
        return np.zeros(0, dtype=object)

    S, D, T, S_inv, T_inv = normal_form(matrix)
    transformed = S_inv @ rhs.astype(object)
    y = np.zeros(cols, dtype=object)
    for i in range(rows):
        d = D[i, i] if i < cols else 0
        if d == 0:
            if transformed[i] != 0:
                raise NoIntegerSolution(list(S_inv[i]), "inconsistent combination of relations")
            continue
        if transformed[i] % d != 0:
            raise NoIntegerSolution(list(S_inv[i]), f"diagonal entry {d} does not divide {transformed[i]}")
        y[i] = transformed[i] // d

    solution = T_inv @ y
    assert (matrix.astype(object) @ solution == rhs.astype(object)).all()

    return solution
