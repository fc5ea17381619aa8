from __future__ import annotations
from dataclasses import dataclass
import cmath
import math

TWO_PI_I = 2j * math.pi
I_PI = 1j * math.pi



def principal_log(z:complex) -> complex:
    """Log with the cut on (-inf, 0], continuous from above; a signed zero imaginary part counts as +0."""
    z = complex(z)
    return cmath.log(complex(z.real, z.imag + 0.0))


def region_bit(z:complex) -> int:
    total = principal_log(z) - principal_log(1 - z) + principal_log((z - 1) / z)
    if abs(total - I_PI) < 1e-9:
        return 0
    assert abs(total + I_PI) < 1e-9

    return 1


@dataclass(frozen=True)
class TetFlattening:
    z:complex
    l1:complex
    l2:complex


    @property
    def l3(self) -> complex:
        return I_PI - self.l1 - self.l2


    @property
    def p(self) -> int:
        return round(((self.l1 - principal_log(self.z)) / TWO_PI_I).real)


    @property
    def q(self) -> int:
        return round(((self.l2 + principal_log(1 - self.z)) / TWO_PI_I).real)


    @property
    def sigma(self) -> int:
        return region_bit(self.z)


    def is_consistent(self, tolerance:float=1e-12) -> bool:
        return (
            abs(cmath.exp(self.l1) - self.z) <= tolerance * max(1.0, abs(self.z))
            and abs(cmath.exp(self.l2) * (1 - self.z) - 1) <= tolerance
        )


    @staticmethod
    def FROM_LIFTS(z:complex, p:int, q:int) -> TetFlattening:
        z = complex(z)
        return TetFlattening(z, principal_log(z) + TWO_PI_I * p, -principal_log(1 - z) + TWO_PI_I * q)
