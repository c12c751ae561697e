"""Integer-order Bessel functions of the first kind.

J_m(x) is summed from its ascending series

    J_m(x) = sum_j (-1)^j (x/2)^(2j+m) / (j! (j+m)!),    m >= 0,

with J_{-m} = (-1)^m J_m.  The terms are accumulated in exact rational
arithmetic at the float argument, so the alternating series loses nothing to
cancellation and the final value is rounded once.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

from .errors import ParameterError
from .records import RelationId, Tolerance, compare

X_MAX = 50.0
ORDER_MAX = 128
_REL_STOP = Fraction(1, 10**18)
_ABS_FLOOR = Fraction(1, 10**300)


@lru_cache(maxsize=65536)
def _series(m: int, x: float) -> float:
    half = Fraction(x) / 2
    q = half * half
    term = half**m / math.factorial(m)
    total = term
    j = 0
    while True:
        j += 1
        term = -term * q / (j * (j + m))
        total += term
        mag = abs(term)
        if mag < _ABS_FLOOR or mag < _REL_STOP * abs(total):
            return float(total)


def bessel_j(m: int, x) -> float:
    if not isinstance(m, int) or isinstance(m, bool):
        raise ParameterError(f"Bessel order must be an integer, got {m!r}")
    if abs(m) > ORDER_MAX:
        raise ParameterError(f"|m| = {abs(m)} exceeds {ORDER_MAX}")
    x = float(x)
    if not math.isfinite(x) or abs(x) > X_MAX:
        raise ParameterError(f"|x| must be at most {X_MAX}, got {x!r}")
    if x == 0.0:
        return 1.0 if m == 0 else 0.0
    v = _series(abs(m), x)
    return -v if (m < 0 and m % 2) else v


def check_bessel_delta(ell: int, x, K: int = 60, tol: Tolerance | None = None):
    """Partial sum of (-1)^k J_{ell-k}(x) J_k(x) over |k| <= K against delta_{ell,0}."""
    if K < abs(ell) + 8:
        raise ParameterError(f"truncation K={K} must be at least |ell| + 8 = {abs(ell) + 8}")
    tol = tol or Tolerance()
    total = math.fsum((-1) ** (k % 2) * bessel_j(ell - k, x) * bessel_j(k, x) for k in range(-K, K + 1))
    target = 1.0 if ell == 0 else 0.0
    return compare(RelationId.BESSEL_DELTA, {"ell": ell, "x": float(x), "K": K}, total, target, tol)


def jacobi_anger_order(x) -> int:
    return math.ceil(math.e * abs(x)) + 24


def jacobi_anger_sum(x, theta, order: int | None = None) -> complex:
    """Truncated J_0(x) + sum_l (-1)^l [e^{il theta} + (-1)^l e^{-il theta}] J_l(x)."""
    if order is None:
        order = jacobi_anger_order(x)
    acc = complex(bessel_j(0, x))
    for ell in range(1, order + 1):
        sign = -1 if ell % 2 else 1
        acc += sign * (cmath.exp(1j * ell * theta) + sign * cmath.exp(-1j * ell * theta)) * bessel_j(ell, x)
    return acc


def check_jacobi_anger(x, theta, order: int | None = None, tol: Tolerance | None = None):
    """exp(-i x sin theta) against its truncated Bessel expansion (absolute error)."""
    if order is None:
        order = jacobi_anger_order(x)
    tol = tol or Tolerance(rel_tol=0.0, abs_tol=1e-10)
    lhs = cmath.exp(-1j * float(x) * math.sin(theta))
    rhs = jacobi_anger_sum(x, theta, order)
    return compare(
        RelationId.JACOBI_ANGER, {"x": float(x), "theta": float(theta), "order": order}, lhs, rhs, tol
    )
