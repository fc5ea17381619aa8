from __future__ import annotations
from typing import List, Sequence, Tuple
from dataclasses import dataclass
import sympy

from .tet_flattening import I_PI, TetFlattening



@dataclass(frozen=True)
class LinearForm:
    """sum_t (c1_t * l1_t + c2_t * l2_t) + constant * i*pi, with rational coefficients."""
    coefficients:Tuple[Tuple[sympy.Rational, sympy.Rational], ...]
    constant:sympy.Rational


    @staticmethod
    def ZERO(tets:int) -> LinearForm:
        zero = sympy.Rational(0)
        return LinearForm(tuple((zero, zero) for _ in range(tets)), zero)


    def __add__(self, other:LinearForm) -> LinearForm:
        assert len(self.coefficients) == len(other.coefficients)
        coefficients = tuple((a1 + b1, a2 + b2) for (a1, a2), (b1, b2) in zip(self.coefficients, other.coefficients))
        return LinearForm(coefficients, self.constant + other.constant)


    def scale(self, factor:sympy.Rational) -> LinearForm:
        factor = sympy.Rational(factor)
        return LinearForm(tuple((factor * c1, factor * c2) for c1, c2 in self.coefficients), factor * self.constant)


    def __neg__(self) -> LinearForm:
        return self.scale(sympy.Rational(-1))


    def add_term(self, tet:int, c1:sympy.Rational, c2:sympy.Rational, constant:sympy.Rational=sympy.Rational(0)) -> LinearForm:
        coefficients:List[Tuple[sympy.Rational, sympy.Rational]] = list(self.coefficients)
        a1, a2 = coefficients[tet]
        coefficients[tet] = (a1 + sympy.Rational(c1), a2 + sympy.Rational(c2))
        return LinearForm(tuple(coefficients), self.constant + sympy.Rational(constant))


    def evaluate(self, tets:Sequence[TetFlattening]) -> complex:
        value = complex(float(self.constant)) * I_PI
        for (c1, c2), f in zip(self.coefficients, tets):
            value += float(c1) * f.l1 + float(c2) * f.l2

        return value


    def lift_coefficients(self) -> List[sympy.Rational]:
        """Coefficients on (p_0, q_0, p_1, q_1, ...) in units of 2*pi*i."""
        row:List[sympy.Rational] = []
        for c1, c2 in self.coefficients:
            row.extend((c1, c2))

        return row


    def to_expression(self) -> sympy.Expr:
        expression = self.constant * sympy.I * sympy.pi
        for tet, (c1, c2) in enumerate(self.coefficients):
            expression += c1 * sympy.Symbol(f"l1_{tet}") + c2 * sympy.Symbol(f"l2_{tet}")

        return expression


    def is_zero(self) -> bool:
        return self.constant == 0 and all(c1 == 0 and c2 == 0 for c1, c2 in self.coefficients)
