"""Definite integrals of a Laguerre polynomial against exponentials, three ways."""

__version__ = "0.1.0"

from .bessel import bessel_j, check_bessel_delta, check_jacobi_anger
from .engines import (
    IntegralParams,
    QuadratureConfig,
    closed_form,
    closed_form_d_ds,
    closed_form_exact,
    quadrature_integral,
    residue_exact,
)
from .errors import NumericalInconsistencyError, ParameterError
from .laguerre import (
    LaguerreIndex,
    laguerre_coeffs,
    laguerre_eval,
    laguerre_eval_exact,
    negative_alpha_rewrite,
)
from .polynomial import RationalPoly
from .records import RelationCheck, RelationId
from .suite import SuiteConfig, VerificationReport, run_suite

__all__ = [
    "IntegralParams", "LaguerreIndex", "NumericalInconsistencyError", "ParameterError",
    "QuadratureConfig", "RationalPoly", "RelationCheck", "RelationId", "SuiteConfig",
    "VerificationReport", "bessel_j", "check_bessel_delta", "check_jacobi_anger", "closed_form",
    "closed_form_d_ds", "closed_form_exact", "laguerre_coeffs", "laguerre_eval",
    "laguerre_eval_exact", "negative_alpha_rewrite", "quadrature_integral", "residue_exact",
    "run_suite",
]
