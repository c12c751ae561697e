import math
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lagint import engines
from lagint.engines import (
    IntegralParams,
    QuadratureConfig,
    closed_form,
    closed_form_d_ds,
    closed_form_d_ds_exact,
    closed_form_direct,
    closed_form_exact,
    default_nodes,
    laurent_integrand,
    quadrature_integral,
    residue_exact,
)
from lagint.errors import NumericalInconsistencyError, ParameterError
from lagint.laguerre import laguerre_eval, laguerre_eval_exact

# L_2^1(x) = 3 - 3x + x^2/2, so I_{2,1}(1/2, 3/2) = -(st/3) L_2^1(1/4) L_2^1(9/4)
I_2_1_HALF_THREEHALVES = -F(3, 4) / 3 * F(73, 32) * F(-39, 32)


def test_frozen_value_is_2847_over_4096():
    assert I_2_1_HALF_THREEHALVES == F(2847, 4096)


class TestClosedForm:
    def test_examples(self):
        assert closed_form(0, 0, 1.9, -0.3) == 1.0
        assert closed_form(0, 2, 1, 1) == 0.5
        assert closed_form(1, -2, 0.7, 1.3) == 0.0
        assert closed_form(2, 1, 0.5, 1.5) == float(I_2_1_HALF_THREEHALVES)
        assert closed_form_exact(2, 1, F(1, 2), F(3, 2)) == I_2_1_HALF_THREEHALVES

    def test_parameter_errors(self):
        for bad in [(-1, 0, 1, 1), (21, 0, 1, 1), (2, 25, 1, 1), (1, 0, 6.5, 1), (1, 0, math.nan, 1)]:
            with pytest.raises(ParameterError):
                closed_form(*bad)
        with pytest.raises(ParameterError):
            IntegralParams(1, 0, 1.0, 1.0, alpha=2).validate()

    def test_negative_k_paths_agree(self):
        rng = np.random.default_rng(7)
        for _ in range(300):
            n = int(rng.integers(1, 12))
            k = -int(rng.integers(1, n + 1))
            s, t = rng.uniform(-2.5, 2.5, 2)
            v = closed_form(n, k, s, t)
            assert abs(closed_form_direct(n, k, float(s), float(t)) - v) <= 1e-12 * max(1, abs(v))
            sq, tq = F(float(s)), F(float(t))
            assert closed_form_direct(n, k, sq, tq) == closed_form_exact(n, k, sq, tq)

    def test_debug_mode_asserts_both_paths(self, monkeypatch):
        monkeypatch.setattr(engines, "_DEBUG", True)
        assert closed_form(4, -3, 1.2, -0.8) == pytest.approx(closed_form_direct(4, -3, 1.2, -0.8), abs=1e-12)

    @settings(max_examples=200, deadline=None)
    @given(
        n=st.integers(0, 10), k=st.integers(-14, 14),
        s=st.floats(-4, 4), t=st.floats(-4, 4),
    )
    def test_symmetry_is_bitwise(self, n, k, s, t):
        assert closed_form(n, k, s, t) == closed_form(n, k, t, s)

    @settings(max_examples=100, deadline=None)
    @given(n=st.integers(0, 8), k=st.integers(-10, 10), s=st.fractions(-3, 3, max_denominator=20), t=st.fractions(-3, 3, max_denominator=20))
    def test_sign_extension(self, n, k, s, t):
        assert closed_form_exact(n, k, -s, t) == (-1) ** (k % 2) * closed_form_exact(n, k, s, t)

    def test_degenerate_points(self):
        for n in range(8):
            for s in (0.0, 0.3, 1.7, -2.2):
                assert closed_form(n, 0, s, 0.0) == pytest.approx(laguerre_eval(n, 0, s * s), rel=1e-15)
                for k in range(-n, 9):
                    if k:
                        assert closed_form(n, k, s, 0.0) == 0.0
                        assert closed_form(n, k, 0.0, s) == 0.0
            assert closed_form_exact(n, 0, F(5, 3), 0) == laguerre_eval_exact(n, 0, F(25, 9))


class TestDerivative:
    def test_examples(self):
        assert closed_form_d_ds(0, 0, 1.4, 0.2) == 0.0
        assert closed_form_d_ds(0, 1, 2, 3) == -3.0
        h = 1e-5
        fd = (closed_form(1, 0, 1.2 + h, 0.8) - closed_form(1, 0, 1.2 - h, 0.8)) / (2 * h)
        assert closed_form_d_ds(1, 0, 1.2, 0.8) == pytest.approx(fd, abs=1e-8)

    def test_vanishing_branch_derivative_is_zero(self):
        assert closed_form_d_ds(2, -3, 1.0, 1.0) == 0.0

    def test_matches_exact_difference_quotient_of_polynomial(self):
        # I is a polynomial in s: a symmetric exact difference converges at O(h^2)
        for n, k in [(3, 2), (4, -2), (5, 0), (2, -2)]:
            s, t = F(7, 5), F(-3, 4)
            h = F(1, 10**6)
            fd = (closed_form_exact(n, k, s + h, t) - closed_form_exact(n, k, s - h, t)) / (2 * h)
            assert abs(fd - closed_form_d_ds_exact(n, k, s, t)) < F(1, 10**8)


class TestQuadrature:
    def test_examples(self):
        q = quadrature_integral(0, 0, 0.5, 0.5, cfg=QuadratureConfig(64))
        assert abs(q - 1) <= 1e-12
        assert abs(quadrature_integral(3, -5, 1.1, 0.9, cfg=QuadratureConfig(128))) <= 1e-12
        q = quadrature_integral(2, 1, 0.5, 1.5, cfg=QuadratureConfig(128))
        assert abs(q.real - 0.695068359375) <= 1e-12

    def test_config_validation(self):
        for bad in (8, 63, 0):
            with pytest.raises(ParameterError):
                QuadratureConfig(nodes=bad)

    def test_default_node_rule(self):
        assert default_nodes(0, 0, 0.1, 0.1) == 64
        assert default_nodes(8, 10, 2.4, 2.4) == 4 * 18 + math.ceil(3 * 2.4 * 2.4) + 32 == 122
        assert default_nodes(0, 3, 1.0, 0.5) == 64
        assert default_nodes(8, 10, 2.4, 2.4) % 2 == 0

    def test_imaginary_part_guard(self):
        # nodes are conjugate-symmetric, so only rounding reaches the imaginary part
        q = quadrature_integral(8, 3, 2.4, 2.1)
        assert q.imag != 0
        with pytest.raises(NumericalInconsistencyError) as info:
            quadrature_integral(8, 3, 2.4, 2.1, cfg=QuadratureConfig(tol_imag=abs(q.imag) / 2))
        assert info.value.value == q

    def test_agreement_box(self):
        pts = [(s, t) for s in (-1.9, -0.6, 0.0, 0.8, 2.0) for t in (-1.1, 0.5, 1.7)]
        for n in range(0, 9, 2):
            for k in range(-n - 4, 11, 3):
                for s, t in pts:
                    q = quadrature_integral(n, k, s, t)
                    c = closed_form(n, k, s, t)
                    assert abs(q.real - c) <= 1e-10 * max(1, abs(c))
                    assert abs(q.imag) <= 1e-11
                    assert abs(quadrature_integral(n, k, t, s).real - q.real) <= 1e-12 * max(1, abs(c))

    def test_sign_extension_via_quadrature(self):
        for n, k in [(3, 2), (4, -1), (2, 5)]:
            a = quadrature_integral(n, k, -1.3, 0.7).real
            b = quadrature_integral(n, k, 1.3, 0.7).real
            assert a == pytest.approx((-1) ** (k % 2) * b, abs=1e-12)


class TestResidue:
    def test_examples(self):
        assert residue_exact(0, 3, 1, 1) == F(-1, 6)
        assert residue_exact(4, -6, F(2, 3), F(1, 5)) == 0
        assert residue_exact(2, 1, F(1, 2), F(3, 2)) == I_2_1_HALF_THREEHALVES
        assert residue_exact(2, 1, "1/2", "3/2") == I_2_1_HALF_THREEHALVES

    def test_laurent_integrand_exponent_range(self):
        lz = laurent_integrand(4, F(1, 3), F(2, 7))
        assert lz.low == -4 and lz.degree == 4

    def test_oracle_agreement_grid(self):
        vals = [F(-2), F(-3, 4), F(0), F(5, 7), F(2)]
        for n in range(9):
            for k in range(-n - 4, 11):
                for s in vals:
                    for t in vals:
                        assert residue_exact(n, k, s, t) == closed_form_exact(n, k, s, t)

    def test_alpha1_matches_quadrature(self):
        for n, k, s, t in [(0, 0, 1, 1), (2, 1, F(1, 2), F(3, 2)), (5, -3, F(-6, 5), F(4, 3)), (3, 6, F(2), F(-1, 3))]:
            exact = residue_exact(n, k, s, t, alpha=1)
            q = quadrature_integral(n, k, float(s), float(t), alpha=1)
            assert q.real == pytest.approx(float(exact), abs=1e-12 * max(1, abs(float(exact))))

    def test_alpha1_n0_is_alpha0(self):
        # L_0^1 = L_0 = 1
        assert residue_exact(0, 2, F(1, 3), F(3)) == residue_exact(0, 2, F(1, 3), F(3), alpha=1)
