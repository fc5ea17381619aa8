from __future__ import annotations
import cmath
import math
import random
import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from errors import ConfigurationRejected, DomainError
from flattening.models import TetFlattening
from dilog.core import (
    FOUR_PI2, H, PI2_6, FiveTermConfiguration, bloch_wigner, cs_differential, cs_tet, cs_tet_raw, five_term_config_residual,
    five_term_residual, integrate_cs_along_path, li2, rogers_R, volume_from_shapes,
)
from dilog.models import CSValue
from pipeline.core import derivative_error

from conftest import FIG8_SHAPES, FIG8_VOLUME



def _reference_li2(z:complex) -> complex:
    return complex(mpmath.polylog(2, mpmath.mpc(z.real, z.imag)))


def _random_flattening(rng:random.Random, lifts:int) -> TetFlattening:
    while True:
        z = complex(rng.uniform(-2.5, 3.5), rng.uniform(-2.5, 2.5))
        if abs(z.imag) > 0.1 and abs(z) > 0.1 and abs(z - 1) > 0.1:
            return TetFlattening.FROM_LIFTS(z, rng.randint(-lifts, lifts), rng.randint(-lifts, lifts))


def test_special_values():
    assert li2(0) == 0
    assert li2(1) == pytest.approx(PI2_6, abs=1e-15)
    assert li2(0.5).real == pytest.approx(math.pi ** 2 / 12 - math.log(2) ** 2 / 2, abs=1e-14)
    assert li2(-1).real == pytest.approx(-math.pi ** 2 / 12, abs=1e-14)


@pytest.mark.parametrize("radius", [0.2, 0.45, 0.7, 0.99, 1.3, 4.0, 50.0])
def test_li2_matches_reference_on_circles(radius):
    for k in range(24):
        angle = 2 * math.pi * (k + 0.5) / 24
        z = cmath.rect(radius, angle)
        expected = _reference_li2(z)
        assert abs(li2(z) - expected) <= 1e-12 * max(1.0, abs(expected))


def test_li2_on_the_cut_is_taken_from_below():
    for x in (1.5, 2.0, 7.0):
        value = li2(x)
        assert value.imag == pytest.approx(-math.pi * math.log(x), abs=1e-12)
        assert value.real == pytest.approx(float(mpmath.re(mpmath.polylog(2, x))), abs=1e-12)


def test_li2_near_the_unit_circle_and_one():
    for z in (cmath.exp(1j * math.pi / 3), 1 + 1e-3j, 0.999 + 0.01j, -0.5 + 0.866j):
        expected = _reference_li2(z)
        assert abs(li2(z) - expected) <= 1e-12 * max(1.0, abs(expected))


def test_rogers_dilogarithm():
    assert rogers_R(0.5).real == pytest.approx(math.pi ** 2 / 12, abs=1e-14)
    h = 1e-6
    for u in (0.2, 0.6):
        numeric = (rogers_R(u + h).real - rogers_R(u - h).real) / (2 * h)
        exact = -0.5 * (math.log(1 - u) / u + math.log(u) / (1 - u))
        assert numeric == pytest.approx(exact, abs=1e-7)


def test_H_values_and_domain():
    assert H(0.5) == pytest.approx(1 / 48, abs=1e-15)
    assert H(1e-12) == pytest.approx(1 / 24, abs=1e-9)
    assert H(1 - 1e-12) == pytest.approx(0, abs=1e-9)
    for bad in (0, 1, 1.5, -0.2, 0.5 + 0.1j):
        with pytest.raises(DomainError):
            H(bad)


def test_H_matches_quadrature():
    def integrand(t:float) -> float:
        return math.log(1 - t) / t + math.log(t) / (1 - t)

    for i in range(1, 100):
        u = i / 100
        integral, _ = quad(integrand, 0, u, limit=200, epsabs=1e-13, epsrel=1e-13)
        rogers = -0.5 * integral
        assert H(u) == pytest.approx((PI2_6 - rogers) / FOUR_PI2, abs=1e-9)


def test_five_term_relation():
    rng = random.Random(1)
    for _ in range(100):
        a, b = rng.uniform(0.01, 0.99), rng.uniform(0.01, 0.99)
        if abs(a - b) < 1e-3:
            continue
        assert abs(five_term_residual(max(a, b), min(a, b))) < 1e-10


@given(st.floats(0.01, 0.99), st.floats(0.01, 0.99))
@settings(max_examples=100)
def test_five_term_relation_holds_everywhere(u, v):
    if not v < u:
        with pytest.raises(DomainError):
            five_term_residual(u, v)
        return
    if u - v < 1e-6:
        return
    assert abs(five_term_residual(u, v)) < 1e-10


def test_bloch_wigner():
    assert bloch_wigner(cmath.exp(1j * math.pi / 3)) == pytest.approx(1.0149416064096536, abs=1e-14)
    z = 0.3 + 1.7j
    assert bloch_wigner(z.conjugate()) == pytest.approx(-bloch_wigner(z), abs=1e-14)
    assert bloch_wigner(0.4) == pytest.approx(0, abs=1e-15)
    assert bloch_wigner(1 / z) == pytest.approx(-bloch_wigner(z), abs=1e-13)


def test_fig8_volume(fig8_branching):
    assert volume_from_shapes(FIG8_SHAPES, fig8_branching.signs) == pytest.approx(FIG8_VOLUME, abs=1e-12)


def test_cs_value_arithmetic():
    value = CSValue.OF(1.25 + 0.5j)
    assert value.real == pytest.approx(0.25)
    assert value.imag == 0.5
    assert (value + CSValue.OF(0.8)).real == pytest.approx(0.05)
    assert (-value).real == pytest.approx(0.75)
    assert (value * -1) == -value
    assert (-1 * value) == -value
    assert CSValue.OF(0.999).distance(CSValue.OF(0.001)) == pytest.approx(0.002)
    assert CSValue.OF(0.75).centred == pytest.approx(-0.25)
    assert CSValue.OF(-1e-18).real < 1.0


def test_cs_on_the_branch_is_H():
    for u in (0.05, 0.3, 0.5, 0.77, 0.95):
        f = TetFlattening.FROM_LIFTS(1 / u, 0, 1)
        assert cs_tet(f).distance(CSValue.OF(H(u))) < 1e-12


@pytest.mark.parametrize("q", [-2, 0, 1, 3])
def test_raising_p_shifts_the_closed_form(q):
    z = 0.4 + 0.9j
    f = TetFlattening.FROM_LIFTS(z, 0, q)
    g = TetFlattening.FROM_LIFTS(z, 1, q)
    expected = 1j * math.pi * cmath.log(1 - z) - 2 * math.pi ** 2 * q + math.pi ** 2
    assert abs(cs_tet_raw(g) - cs_tet_raw(f) - expected) < 1e-12


def test_derivative_law():
    rng = random.Random(2)
    for _ in range(100):
        f = _random_flattening(rng, 3)
        error = derivative_error(f)
        assert error is not None
        assert error < 1e-5


def test_differential_is_linear():
    f = TetFlattening.FROM_LIFTS(0.2 + 0.6j, 1, -1)
    assert cs_differential(f, 1, 0) + cs_differential(f, 0, 1) == pytest.approx(cs_differential(f, 1, 1))


def test_closed_form_matches_path_integration():
    rng = random.Random(3)
    for _ in range(100):
        f = _random_flattening(rng, 2)
        assert integrate_cs_along_path(f).distance(cs_tet(f)) < 1e-8


def test_path_integration_start_point():
    f = TetFlattening.FROM_LIFTS(2.0, 0, 1)
    assert integrate_cs_along_path(f).distance(CSValue.OF(1 / 48)) < 1e-9


def test_real_five_term_configuration():
    for u, v in ((0.7, 0.2), (0.5, 0.45), (0.9, 0.1)):
        residual = five_term_config_residual((None, 0, 1, 1 / u, 1 / v))
        assert abs(residual) < 1e-10


def test_five_term_configuration_tetrahedra_are_flattenings():
    configuration = FiveTermConfiguration((None, 0, 1, 2 + 1j, -0.5 + 3j))
    for f in configuration.sub_tetrahedra():
        assert abs(cmath.exp(f.l1) - f.z) < 1e-12 * max(1.0, abs(f.z))
        assert abs(cmath.exp(f.l2) * (1 - f.z) - 1) < 1e-10


def test_five_term_configuration_rejections():
    with pytest.raises(ConfigurationRejected, match="only allowed as the first"):
        FiveTermConfiguration((0, 1, None, 2, 3))
    with pytest.raises(ConfigurationRejected, match="distinct"):
        FiveTermConfiguration((None, 0, 1, 1, 3))
    with pytest.raises(ConfigurationRejected, match="first in the order"):
        FiveTermConfiguration((None, 0, 1, 2, 3), order=(1, 0, 2, 3, 4))
    with pytest.raises(ConfigurationRejected):
        FiveTermConfiguration((None, 0, 1, 2))
