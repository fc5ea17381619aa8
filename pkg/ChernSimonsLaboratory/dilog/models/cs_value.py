from __future__ import annotations
from dataclasses import dataclass
import math



def _fraction(x:float) -> float:
    value = x - math.floor(x)
    return 0.0 if value >= 1.0 else value


@dataclass(frozen=True)
class CSValue:
    """Complex Chern-Simons value modulo the integers, real part kept in [0, 1)."""
    real:float
    imag:float


    @staticmethod
    def OF(value:complex) -> CSValue:
        value = complex(value)
        return CSValue(_fraction(value.real), value.imag)


    @staticmethod
    def ZERO() -> CSValue:
        return CSValue(0.0, 0.0)


    @property
    def value(self) -> complex:
        return complex(self.real, self.imag)


    @property
    def centred(self) -> complex:
        """Representative with real part in [-1/2, 1/2)."""
        real = self.real - 1.0 if self.real >= 0.5 else self.real
        return complex(real, self.imag)


    def __add__(self, other:CSValue) -> CSValue:
        return CSValue.OF(self.value + other.value)


    def __sub__(self, other:CSValue) -> CSValue:
        return CSValue.OF(self.value - other.value)


    def __neg__(self) -> CSValue:
        return CSValue.OF(-self.value)


    def __mul__(self, sign:int) -> CSValue:
        assert isinstance(sign, int)
        return CSValue.OF(sign * self.value)


    __rmul__ = __mul__


    def distance(self, other:CSValue) -> float:
        delta = self.real - other.real
        real = abs(delta - round(delta))
        return math.hypot(real, self.imag - other.imag)
