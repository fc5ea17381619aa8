from __future__ import annotations
from functools import lru_cache
from typing import Tuple
import cmath
import logging
import math
from scipy.special import bernoulli

from errors import DomainError
from flattening.models import principal_log

logger = logging.getLogger(__name__)

PI2_6 = math.pi ** 2 / 6
SERIES_RADIUS = 0.5
SERIES_EPSILON = 1e-18
BERNOULLI_TERMS = 40



@lru_cache(maxsize=1)
def _bernoulli_coefficients() -> Tuple[float, ...]:
    #B_2k / (2k + 1)! for k = 1 .. BERNOULLI_TERMS / 2
    numbers = bernoulli(BERNOULLI_TERMS)
    return tuple(float(numbers[2 * k]) / math.factorial(2 * k + 1) for k in range(1, BERNOULLI_TERMS // 2 + 1))


def _power_series(z:complex) -> complex:
    total = 0j
    power = z
    k = 1
    while True:
        term = power / (k * k)
        total += term
        if abs(term) < SERIES_EPSILON:
            return total
        k += 1
        power *= z


def _bernoulli_series(z:complex) -> complex:
    u = -principal_log(1 - z)
    u2 = u * u
    total = u - u2 / 4 #B_0 u + B_1 u^2 / 2 with B_1 = -1/2
    power = u
    for coefficient in _bernoulli_coefficients():
        power *= u2
        total += coefficient * power

    return total


def li2(z:complex) -> complex:
    """
    Principal dilogarithm. On the cut z > 1 the value is taken from below,
    Im Li2(x) = -pi * log(x).
    """
    z = complex(z)
    z = complex(z.real, z.imag + 0.0)
    if z == 0:
        return 0j
    if z == 1:
        return complex(PI2_6)

    if abs(z) > 1:
        minus = complex(-z.real, -z.imag + 0.0) #real z > 1 lands on the upper lip of the negative axis
        return -li2(1 / z) - PI2_6 - 0.5 * cmath.log(minus) ** 2
    if z.real > 0.5:
        return PI2_6 - principal_log(z) * principal_log(1 - z) - li2(1 - z)
    if abs(z) <= SERIES_RADIUS:
        return _power_series(z)

    return _bernoulli_series(z)


def rogers_R(z:complex) -> complex:
    if z == 0:
        return 0j
    if z == 1:
        return complex(PI2_6)

    return 0.5 * principal_log(z) * principal_log(1 - z) + li2(z)


def H(u:float) -> float:
    """(pi^2/6 - R(u)) / (4 pi^2) on 0 < u < 1."""
    if isinstance(u, complex):
        if u.imag != 0:
            raise DomainError(u, "(0, 1)")
        u = u.real
    if not 0 < u < 1:
        raise DomainError(u, "(0, 1)")

    return (PI2_6 - rogers_R(u).real) / (4 * math.pi ** 2)


def bloch_wigner(z:complex) -> float:
    z = complex(z)
    if z == 0 or z == 1:
        return 0.0

    return li2(z).imag + principal_log(1 - z).imag * math.log(abs(z))
