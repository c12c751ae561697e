import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lagint.bessel import (
    bessel_j,
    check_bessel_delta,
    check_jacobi_anger,
    jacobi_anger_order,
    jacobi_anger_sum,
)
from lagint.errors import ParameterError


def bessel_by_integral(m, x, nodes=512):
    """Oracle: J_m(x) = (1/2pi) int_0^{2pi} cos(m tau - x sin tau) dtau, periodic trapezoid."""
    tau = 2 * np.pi * np.arange(nodes) / nodes
    return float(np.mean(np.cos(m * tau - x * np.sin(tau))))


def test_small_examples():
    assert bessel_j(0, 0) == 1.0
    assert bessel_j(3, 0) == 0.0
    assert bessel_j(-2, 1.7) == bessel_j(2, 1.7)


@pytest.mark.parametrize("m", [0, 1, 2, 5, 9, 20, -3, -8])
@pytest.mark.parametrize("x", [0.3, 1.0, 2.5, 7.0, 10.0, -4.2, 18.0])
def test_matches_integral_representation(m, x):
    assert bessel_j(m, x) == pytest.approx(bessel_by_integral(m, x), abs=2e-14)


def test_large_argument_keeps_accuracy():
    # the exact summation avoids the cancellation a float series would suffer here
    for m in (0, 1, 7):
        assert bessel_j(m, 45.0) == pytest.approx(bessel_by_integral(m, 45.0, 1024), abs=1e-13)


@settings(max_examples=80, deadline=None)
@given(m=st.integers(-40, 40), x=st.floats(-20, 20))
def test_parity_and_bound(m, x):
    assert bessel_j(-m, x) == (-1) ** (m % 2) * bessel_j(m, x)
    assert abs(bessel_j(m, x)) <= 1.0


@pytest.mark.parametrize("bad", [(0, 51.0), (0, math.nan), (200, 1.0)])
def test_domain_errors(bad):
    with pytest.raises(ParameterError):
        bessel_j(*bad)


def test_delta_sum_examples():
    one = check_bessel_delta(0, 2.0, 40)
    assert one.passed and abs(one.lhs - 1) <= 1e-12
    zero = check_bessel_delta(3, 2.0, 40)
    assert zero.passed and abs(zero.lhs) <= 1e-12
    assert check_bessel_delta(0, 0.0, 8).lhs == 1.0
    with pytest.raises(ParameterError):
        check_bessel_delta(5, 1.0, 10)


@pytest.mark.parametrize("x", [0.25, 1.0, 3.7, 10.0, -6.0])
def test_jacobi_anger_reconstruction(x):
    for theta in np.linspace(0, 2 * np.pi, 9):
        c = check_jacobi_anger(x, theta)
        assert c.passed, c
        assert abs(jacobi_anger_sum(x, theta) - cmath.exp(-1j * x * math.sin(theta))) <= 1e-10
    assert jacobi_anger_order(x) == math.ceil(math.e * abs(x)) + 24
