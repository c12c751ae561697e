"""Three evaluation routes for

    I_{n,k}(s,t) = (1/2pi) int_0^{2pi} L_n^alpha(s^2 + t^2 + 2st cos th) e^{-ik th} exp(-st e^{i th}) dth

with alpha = 0 (the integral itself) or alpha = 1 (its L^1 sibling):

* :func:`closed_form` / :func:`closed_form_exact`: the factorized product of
  two generalized Laguerre values, alpha = 0 only.
* :func:`quadrature_integral`: the periodic trapezoid rule on the integrand.
* :func:`residue_exact`: the z^k coefficient of the Laurent expansion of
  L_n^alpha(s^2 + t^2 + st(z + 1/z)) exp(-st z), in exact rationals.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import NumericalInconsistencyError, ParameterError
from .laguerre import (
    N_MAX,
    _coeffs,
    as_fraction,
    laguerre_eval_array,
    laguerre_value,
    negative_alpha_rewrite,
)
from .polynomial import RationalPoly

K_MAX = 24
ST_MAX = 6.0

_DEBUG = os.environ.get("LAGUERRE_DEBUG", "") not in ("", "0")


@dataclass(frozen=True)
class IntegralParams:
    n: int
    k: int
    s: object
    t: object
    alpha: int = 0

    def validate(self, exact: bool = False) -> IntegralParams:
        for name in ("n", "k", "alpha"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise ParameterError(f"{name} must be an integer, got {v!r}")
        if not 0 <= self.n <= N_MAX:
            raise ParameterError(f"n={self.n} outside 0..{N_MAX}")
        if abs(self.k) > K_MAX:
            raise ParameterError(f"|k|={abs(self.k)} exceeds {K_MAX}")
        if self.alpha not in (0, 1):
            raise ParameterError(f"alpha must be 0 or 1, got {self.alpha}")
        if not exact:
            for name in ("s", "t"):
                v = getattr(self, name)
                try:
                    vf = float(v)
                except (TypeError, ValueError) as exc:
                    raise ParameterError(f"{name} must be real, got {v!r}") from exc
                if not math.isfinite(vf) or abs(vf) > ST_MAX:
                    raise ParameterError(f"|{name}| must be finite and at most {ST_MAX}, got {v!r}")
        return self


@dataclass(frozen=True)
class QuadratureConfig:
    nodes: int | None = None
    tol_imag: float = 1e-11

    def __post_init__(self):
        if self.nodes is not None and (self.nodes < 16 or self.nodes % 2):
            raise ParameterError(f"node count must be even and >= 16, got {self.nodes}")
        if not self.tol_imag > 0:
            raise ParameterError("tol_imag must be positive")


def default_nodes(n: int, k: int, s, t) -> int:
    m = 4 * (n + abs(k)) + math.ceil(3 * abs(float(s) * float(t))) + 32
    m += m % 2
    return max(64, m)


def _reduced(n: int, k: int) -> tuple[int, int, Fraction]:
    """Rewrite I_{n,k} as c (st)^p L_N^p(s^2) L_N^p(t^2) with p >= 0.

    For k >= 0 this is the closed form itself.  For k = -m < 0 both
    L_n^{-m} factors go through the negative-alpha rewrite, which leaves
    (N, p) = (n - m, m) and removes the negative power of st.
    """
    if k >= 0:
        ratio = Fraction(1)
        for j in range(n + 1, n + k + 1):
            ratio /= j
        return n, k, (-1) ** k * ratio
    m = -k
    # n!/(n-m)! as a running product, then the rewrite's ((n-m)!/n!)^2.
    prod = 1
    for j in range(n, n - m, -1):
        prod *= j
    return n - m, m, (-1) ** m * Fraction(1, prod)


def _closed(n: int, k: int, s, t):
    if k < -n:
        return 0 * s * t
    N, p, c = _reduced(n, k)
    a = laguerre_value(N, p, s * s)
    b = laguerre_value(N, p, t * t)
    st = s * t
    if isinstance(st, float):
        return float(c) * st**p * (a * b)
    return c * st**p * (a * b)


def closed_form_direct(n: int, k: int, s, t):
    """Closed form with n!/(n+k)! and (st)^k kept unreduced; needs st != 0 when k < 0."""
    IntegralParams(n, k, s, t).validate(exact=not isinstance(s, float))
    if k < -n:
        return 0 * s * t
    ratio = Fraction(1)
    if k >= 0:
        for j in range(n + 1, n + k + 1):
            ratio /= j
        a = laguerre_value(n, k, s * s)
        b = laguerre_value(n, k, t * t)
    else:
        for j in range(n, n + k, -1):
            ratio *= j
        a = negative_alpha_rewrite(n, -k, s * s)
        b = negative_alpha_rewrite(n, -k, t * t)
    st = s * t
    sign = (-1) ** (k % 2)
    if isinstance(st, float):
        return sign * float(ratio) * st**k * (a * b)
    return sign * ratio * st**k * (a * b)


def closed_form(n: int, k: int, s, t) -> float:
    """I_{n,k}(s,t) from the factorized closed form, in double precision."""
    s, t = float(s), float(t)
    IntegralParams(n, k, s, t).validate()
    value = _closed(n, k, s, t)
    if _DEBUG and k < 0 and k >= -n and s * t != 0:
        direct = closed_form_direct(n, k, s, t)
        assert abs(direct - value) <= 1e-12 * max(1.0, abs(value)), (n, k, s, t, value, direct)
    return value


def closed_form_exact(n: int, k: int, s, t) -> Fraction:
    s, t = as_fraction(s), as_fraction(t)
    IntegralParams(n, k, s, t).validate(exact=True)
    return Fraction(_closed(n, k, s, t))


def _d_ds(n: int, k: int, s, t):
    if k < -n:
        return 0 * s * t
    N, p, c = _reduced(n, k)
    a = laguerre_value(N, p, s * s)
    da = -laguerre_value(N - 1, p + 1, s * s)  # d/dx L_N^p = -L_{N-1}^{p+1}
    b = laguerre_value(N, p, t * t)
    ds_part = 2 * s ** (p + 1) * da
    if p:
        ds_part = ds_part + p * s ** (p - 1) * a
    if isinstance(s, float):
        return float(c) * t**p * b * ds_part
    return c * t**p * b * ds_part


def closed_form_d_ds(n: int, k: int, s, t) -> float:
    """Analytic partial derivative of the closed form with respect to s."""
    s, t = float(s), float(t)
    IntegralParams(n, k, s, t).validate()
    return float(_d_ds(n, k, s, t))


def closed_form_d_ds_exact(n: int, k: int, s, t) -> Fraction:
    s, t = as_fraction(s), as_fraction(t)
    IntegralParams(n, k, s, t).validate(exact=True)
    return Fraction(_d_ds(n, k, s, t))


def closed_form_d_dt(n: int, k: int, s, t) -> float:
    return closed_form_d_ds(n, k, t, s)


def closed_form_d_dt_exact(n: int, k: int, s, t) -> Fraction:
    return closed_form_d_ds_exact(n, k, t, s)


@lru_cache(maxsize=1 << 16)
def _trapezoid(n: int, k: int, s: float, t: float, alpha: int, nodes: int) -> complex:
    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    st = s * t
    x = s * s + t * t + 2.0 * st * np.cos(theta)
    f = laguerre_eval_array(n, alpha, x) * np.exp(-1j * k * theta - st * np.exp(1j * theta))
    return complex(f.sum() / nodes)


def quadrature_integral(n: int, k: int, s, t, alpha: int = 0, cfg: QuadratureConfig | None = None) -> complex:
    """Trapezoid rule at equispaced nodes; raises if the imaginary part is not negligible."""
    s, t = float(s), float(t)
    IntegralParams(n, k, s, t, alpha).validate()
    cfg = cfg or QuadratureConfig()
    nodes = cfg.nodes or default_nodes(n, k, s, t)
    value = _trapezoid(n, k, s, t, alpha, nodes)
    if not abs(value.imag) <= cfg.tol_imag:
        raise NumericalInconsistencyError(
            f"imaginary part {value.imag:.3e} exceeds {cfg.tol_imag:.1e} with {nodes} nodes", value
        )
    return value


def laurent_integrand(n: int, s: Fraction, t: Fraction, alpha: int = 0) -> RationalPoly:
    """L_n^alpha(s^2 + t^2 + st(z + 1/z)) as a Laurent polynomial in z."""
    b = s * t
    u = RationalPoly((b, s * s + t * t, b), -1)
    return _coeffs(n, alpha).compose(u)


@lru_cache(maxsize=4096)
def _residue(n: int, k: int, s: Fraction, t: Fraction, alpha: int) -> Fraction:
    if k < -n:
        return Fraction(0)
    lz = laurent_integrand(n, s, t, alpha)
    minus_b = -s * t
    # exp(-st z) only matters up to z^(n+k): the Laurent factor starts at z^-n.
    total = Fraction(0)
    term = Fraction(1)
    for ell in range(n + k + 1):
        if ell:
            term = term * minus_b / ell
        total += term * lz.coefficient(k - ell)
    return total


def residue_exact(n: int, k: int, s, t, alpha: int = 0) -> Fraction:
    """Exact I_{n,k} (or I^1_{n,k}) at rational s, t by residue extraction."""
    s, t = as_fraction(s), as_fraction(t)
    IntegralParams(n, k, s, t, alpha).validate(exact=True)
    return _residue(n, k, s, t, alpha)
