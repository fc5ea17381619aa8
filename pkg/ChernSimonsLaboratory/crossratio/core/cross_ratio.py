from __future__ import annotations
from typing import Optional, Sequence

from triangulation.models import Ordering, classify



def configuration_cross_ratio(points:Sequence[Optional[complex]], ordering:Ordering) -> complex:
    """
    X(abcd) = (pd - pb)(pc - pa) / ((pc - pb)(pd - pa)) for four points of the Riemann sphere.
    `None` stands for infinity; each point occurs once upstairs and once downstairs, so
    the two factors through infinity cancel.
    """
    a, b, c, d = ordering

    def difference(i:int, j:int) -> Optional[complex]:
        if points[i] is None or points[j] is None:
            return None
        return complex(points[i]) - complex(points[j]) #type: ignore[arg-type]

    numerator = [difference(d, b), difference(c, a)]
    denominator = [difference(c, b), difference(d, a)]

    value = complex(1)
    for factor in numerator:
        if factor is not None:
            value *= factor
    for factor in denominator:
        if factor is not None:
            value /= factor

    return value


def expand_cross_ratio(z:complex, roles:Ordering) -> complex:
    """Cross-ratio at a role ordering of the tetrahedron with vertices (inf, 0, 1, z)."""
    return configuration_cross_ratio((None, 0j, 1 + 0j, complex(z)), roles)


def cross_ratio_log_derivative(z:complex, roles:Ordering) -> complex:
    ordering_class, sign = classify(roles)
    if ordering_class.shape_index == 0:
        return sign / z
    if ordering_class.shape_index == 1:
        return sign / (1 - z)

    return sign / (z * (z - 1))
