"""Generalized Laguerre polynomials L_n^alpha(x) for integer alpha >= -n.

Everything is driven by the exact coefficient vector

    c_j = (-1)**j * binom(n + alpha, n - j) / j!,

so the rational and double-precision values come from the same polynomial.
The double-precision scalar value is the exact rational Horner value at the
(exactly representable) float argument, rounded once; array evaluation for the
quadrature engine uses the three-term recurrence in float64.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import numpy as np

from .errors import ParameterError
from .polynomial import RationalPoly

N_MAX = 20
ALPHA_MAX = 24


@dataclass(frozen=True)
class LaguerreIndex:
    n: int
    alpha: int

    def validate(self, bounded: bool = True) -> LaguerreIndex:
        if not (isinstance(self.n, int) and isinstance(self.alpha, int)):
            raise ParameterError("Laguerre indices must be integers")
        if self.n < 0:
            raise ParameterError(f"degree must be non-negative, got n={self.n}")
        if self.alpha < -self.n:
            raise ParameterError(f"alpha={self.alpha} is below -n={-self.n}")
        if bounded and (self.n > N_MAX or abs(self.alpha) > ALPHA_MAX):
            raise ParameterError(
                f"(n={self.n}, alpha={self.alpha}) outside n <= {N_MAX}, |alpha| <= {ALPHA_MAX}"
            )
        return self


@lru_cache(maxsize=None)
def _coeffs(n: int, alpha: int) -> RationalPoly:
    top = n + alpha
    return RationalPoly(
        tuple((-1) ** j * Fraction(math.comb(top, n - j), math.factorial(j)) for j in range(n + 1))
    )


def laguerre_coeffs(n: int, alpha: int, *, bounded: bool = True) -> RationalPoly:
    """Exact coefficients of L_n^alpha as a :class:`RationalPoly`.

    ``bounded=False`` lifts the default ``n``/``alpha`` caps; series checks
    need superscripts beyond ``ALPHA_MAX``.
    """
    LaguerreIndex(n, alpha).validate(bounded)
    return _coeffs(n, alpha)


def as_fraction(x) -> Fraction:
    """Convert an exact scalar (int, Fraction, ``"p/q"`` string) or a float, exactly."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise ParameterError("booleans are not numbers here")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ParameterError(f"non-finite argument {x!r}")
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParameterError(f"cannot parse {x!r} as a rational number") from exc
    raise ParameterError(f"unsupported scalar type {type(x).__name__}")


def _check_real(x) -> float:
    try:
        xf = float(x)
    except (TypeError, ValueError) as exc:
        raise ParameterError(f"expected a real number, got {x!r}") from exc
    if not math.isfinite(xf):
        raise ParameterError(f"non-finite argument {x!r}")
    return xf


def laguerre_eval_exact(n: int, alpha: int, x, *, bounded: bool = True) -> Fraction:
    return laguerre_coeffs(n, alpha, bounded=bounded)(as_fraction(x))


def laguerre_eval(n: int, alpha: int, x, *, bounded: bool = True) -> float:
    """L_n^alpha(x) in double precision (correctly rounded from the exact value)."""
    xf = _check_real(x)
    return float(laguerre_coeffs(n, alpha, bounded=bounded)(Fraction(xf)))


def laguerre_value(n: int, alpha: int, x, *, bounded: bool = True):
    """Exact value for rational ``x``, double for float ``x``; ``L_{-1}`` is 0."""
    if n < 0:
        return Fraction(0) if not isinstance(x, float) else 0.0
    if isinstance(x, float):
        return laguerre_eval(n, alpha, x, bounded=bounded)
    return laguerre_eval_exact(n, alpha, x, bounded=bounded)


def laguerre_eval_array(n: int, alpha: int, x) -> np.ndarray:
    """Vectorized float64 evaluation by the upward three-term recurrence.

    (m+1) L_{m+1} = (2m + 1 + alpha - x) L_m - (m + alpha) L_{m-1}
    holds as a polynomial identity, so integer alpha < 0 is fine.
    """
    LaguerreIndex(n, alpha).validate(bounded=False)
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if n == 0:
        return prev
    cur = 1.0 + alpha - x
    for m in range(1, n):
        prev, cur = cur, ((2 * m + 1 + alpha - x) * cur - (m + alpha) * prev) / (m + 1)
    return cur


def negative_alpha_rewrite(n: int, m: int, x, *, bounded: bool = True):
    """L_n^{-m}(x) = (-x)^m (n-m)!/n! L_{n-m}^m(x) for 1 <= m <= n.

    Returns a Fraction for rational ``x`` and a float otherwise.
    """
    if not (isinstance(m, int) and 1 <= m <= n):
        raise ParameterError(f"rewrite needs 1 <= m <= n, got m={m}, n={n}")
    LaguerreIndex(n, -m).validate(bounded)
    ratio = Fraction(math.factorial(n - m), math.factorial(n))
    if isinstance(x, float):
        xf = _check_real(x)
        return float((-Fraction(xf)) ** m * ratio * _coeffs(n - m, m)(Fraction(xf)))
    xq = as_fraction(x)
    return (-xq) ** m * ratio * _coeffs(n - m, m)(xq)
