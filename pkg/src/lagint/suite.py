"""Machine-checked identities for I_{n,k}(s,t) and the polynomials behind it.

Each ``check_*`` function instantiates one identity at one parameter point and
returns :class:`~lagint.records.RelationCheck` records.  :func:`run_suite`
fans the checks out over a parameter box and aggregates a
:class:`VerificationReport`.
"""

from __future__ import annotations

import cmath
import math
import os
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, partial
from typing import Callable, Iterable, Sequence

import numpy as np

from . import records
from .bessel import bessel_j, check_bessel_delta, check_jacobi_anger, jacobi_anger_order
from .engines import (
    K_MAX,
    QuadratureConfig,
    closed_form,
    closed_form_d_ds,
    closed_form_d_ds_exact,
    closed_form_d_dt,
    closed_form_d_dt_exact,
    closed_form_exact,
    default_nodes,
    quadrature_integral,
    residue_exact,
)
from .errors import NumericalInconsistencyError, ParameterError
from .laguerre import N_MAX, _coeffs, as_fraction, laguerre_coeffs, laguerre_eval, laguerre_eval_array
from .polynomial import MultiPoly, RationalPoly
from .records import RelationCheck, RelationId, Tolerance, compare, compare_exact

R = RelationId

DEFAULT_GRID = tuple((s, t) for s in (0.4, 1.0, 1.7, 2.3) for t in (0.4, 1.0, 1.7, 2.3))
DEFAULT_THETAS = tuple(2 * math.pi * j / 8 for j in range(8))
BESSEL_XS = (0.0, 0.5, 2.0, 5.0, 10.0)
BESSEL_ELL_MAX = 6
SERIES_REL_STOP = 1e-16


def _p(**kw):
    return {k: (str(v) if isinstance(v, Fraction) else v) for k, v in kw.items()}


# -- the integral and its derivatives, on either scalar path -------------------------------


class _Values:
    """I, I^1 and dI/ds, dI/dt at one (s, t), from quadrature or exact residues."""

    def __init__(self, s, t, exact: bool, qcfg: QuadratureConfig | None = None):
        self.s, self.t, self.exact = s, t, exact
        self.qcfg = qcfg

    def I(self, n, k, alpha=0):
        if n < 0:
            return Fraction(0) if self.exact else 0.0
        if self.exact:
            return residue_exact(n, k, self.s, self.t, alpha)
        return quadrature_integral(n, k, self.s, self.t, alpha, self.qcfg).real

    def d_ds(self, n, k):
        return (closed_form_d_ds_exact if self.exact else closed_form_d_ds)(n, k, self.s, self.t)

    def d_dt(self, n, k):
        return (closed_form_d_dt_exact if self.exact else closed_form_d_dt)(n, k, self.s, self.t)


def _judge(rid, params, lhs, rhs, tol, exact, floor=0.0):
    if exact:
        return compare_exact(rid, params, lhs, rhs)
    return compare(rid, params, lhs, rhs, tol, floor=floor)


def _scalars(s, t, exact):
    if exact:
        return as_fraction(s), as_fraction(t)
    return float(s), float(t)


def _central_difference(f, x, h):
    return (f(x + h) - f(x - h)) / (2 * h)


def _fd_mismatch(n, k, s, t) -> str:
    """Debug cross-check of the analytic s- and t-derivatives."""
    notes = []
    hs = 1e-5 * max(1.0, abs(s))
    fd = _central_difference(lambda v: closed_form(n, k, v, t), s, hs)
    an = closed_form_d_ds(n, k, s, t)
    if abs(fd - an) > 1e-7 * max(1.0, abs(an)):
        notes.append(f"d/ds analytic {an!r} vs finite difference {fd!r}")
    ht = 1e-5 * max(1.0, abs(t))
    fd = _central_difference(lambda v: closed_form(n, k, s, v), t, ht)
    an = closed_form_d_dt(n, k, s, t)
    if abs(fd - an) > 1e-7 * max(1.0, abs(an)):
        notes.append(f"d/dt analytic {an!r} vs finite difference {fd!r}")
    return "; ".join(notes)


def check_diffeq(n, k, s, t, tol: Tolerance | None = None, exact=False, debug=False) -> RelationCheck:
    """s dI_{n+1,k}/ds - [2(n+1)+k] I_{n+1,k} = [2t^2 - 2(n+1) - k] I_{n,k} - t dI_{n,k}/dt."""
    if n < 0 or k < -n:
        raise ParameterError(f"differential equation needs n >= 0 and k >= -n, got n={n}, k={k}")
    s, t = _scalars(s, t, exact)
    if s == 0 or t == 0:
        raise ParameterError("differential equation is checked for nonzero s, t")
    cf = closed_form_exact if exact else closed_form
    v = _Values(s, t, exact)
    lhs = s * v.d_ds(n + 1, k) - (2 * (n + 1) + k) * cf(n + 1, k, s, t)
    rhs = (2 * t * t - 2 * (n + 1) - k) * cf(n, k, s, t) - t * v.d_dt(n, k)
    params = _p(n=n, k=k, s=s, t=t, exact=exact)
    out = _judge(R.DIFFEQ4, params, lhs, rhs, tol or Tolerance(), exact)
    if debug and not exact:
        mismatch = _fd_mismatch(n + 1, k, s, t) or _fd_mismatch(n, k, s, t)
        if mismatch:
            out.status, out.note = records.FAIL, mismatch
    return out


def check_integral_relations(n, k, s, t, tol: Tolerance | None = None, exact=False,
                             qcfg: QuadratureConfig | None = None) -> list[RelationCheck]:
    """The five relations between I, I^1 and dI/ds (the first four need n >= 1)."""
    s, t = _scalars(s, t, exact)
    tol = tol or Tolerance()
    v = _Values(s, t, exact, qcfg)
    params = _p(n=n, k=k, s=s, t=t, exact=exact)
    rows: list[tuple[RelationId, Callable]] = []
    if n >= 1:
        rows += [
            (R.REL_FIRST, lambda: (
                s * v.d_ds(n, k),
                -k * v.I(n, k) - 2 * s * s * v.I(n - 1, k, 1)
                - 2 * s * t * (v.I(n, k - 1) + v.I(n - 1, k - 1, 1)),
            )),
            (R.REL_SECOND, lambda: (
                s * v.d_ds(n, k),
                k * v.I(n, k) - 2 * s * s * v.I(n - 1, k, 1) - 2 * s * t * v.I(n - 1, k + 1, 1),
            )),
            (R.REL_THIRD, lambda: (
                s * v.d_ds(n, k) - t * v.d_dt(n, k),
                -2 * (s * s - t * t) * v.I(n - 1, k, 1),
            )),
            (R.REL_FOURTH, lambda: (
                v.I(n - 1, k, 1) + v.I(n, k),
                v.I(n, k, 1),
            )),
        ]
    rows.append((R.REL_FIFTH, lambda: (
        (s * s + t * t) * v.I(n, k, 1) + s * t * (v.I(n, k - 1, 1) + v.I(n, k + 1, 1)),
        (n + 1) * (v.I(n, k) - v.I(n + 1, k)),
    )))
    out = []
    for rid, sides in rows:
        try:
            lhs, rhs = sides()
        except NumericalInconsistencyError as exc:
            out.append(records.errored(rid, params, str(exc)))
            continue
        # quadrature noise is absolute, so small values are judged against unit scale
        out.append(_judge(rid, params, lhs, rhs, tol, exact, floor=1.0))
    return out


def _random_rationals(rng: np.random.Generator, count: int) -> list[Fraction]:
    return [Fraction(int(rng.integers(-400, 401)), int(rng.integers(1, 64))) for _ in range(count)]


def _lag(m, k) -> RationalPoly:
    return RationalPoly() if m < 0 else laguerre_coeffs(m, k)


def check_laguerre_recurrences(m, k, sample_count=3, seed=0) -> list[RelationCheck]:
    """Three-term identities of L_m^k as exact polynomial identities plus rational spot values."""
    if m < 0 or k < -m:
        raise ParameterError(f"recurrences need m >= 0 and k >= -m, got m={m}, k={k}")
    x = RationalPoly.monomial(1, 1)
    identities = {
        R.LAG_REC5: (_lag(m - 1, k + 1) + _lag(m, k), _lag(m, k + 1)),
        R.LAG_REC6: (x * _lag(m, k + 1), (m + k + 1) * _lag(m, k) - (m + 1) * _lag(m + 1, k)),
        R.LAG_REC7: (_lag(m + 1, k).derivative(), -_lag(m, k + 1)),
    }
    rng = np.random.default_rng([seed, m, k + 64])
    points = _random_rationals(rng, sample_count)
    out = []
    for rid, (lhs, rhs) in identities.items():
        out.append(compare_exact(rid, _p(m=m, k=k), lhs, rhs))
        for xq in points:
            out.append(compare_exact(rid, _p(m=m, k=k, x=xq), lhs(xq), rhs(xq)))
    return out


@lru_cache(maxsize=None)
def top_coefficient(n: int, k: int) -> Fraction:
    """Coefficient of (st)^(2n+k) in I_{n,k} as a polynomial in s and t.

    I_{n,k} is carried symbolically: variables (z, s, t), the Laurent
    integrand L_n(s^2 + t^2 + st z + st/z) exp(-st z), then the z^k
    coefficient and finally the s^D t^D monomial with D = 2n + k.
    """
    if n < 0 or k < -n:
        raise ParameterError(f"need n >= 0 and k >= -n, got n={n}, k={k}")
    u = MultiPoly({(0, 2, 0): 1, (0, 0, 2): 1, (1, 1, 1): 1, (-1, 1, 1): 1}, 3)
    acc = MultiPoly(nvars=3)
    lag = _coeffs(n, 0)
    for e in range(n, -1, -1):
        acc = acc * u + lag.coefficient(e)
    z_k = MultiPoly(nvars=2)
    for ell in range(n + k + 1):
        e_term = MultiPoly({(ell, ell): Fraction((-1) ** ell, math.factorial(ell))}, 2)
        z_k = z_k + e_term * acc.select(0, k - ell)
    d = 2 * n + k
    return z_k.coefficient((d, d))


def check_top_coefficient(n, k) -> RelationCheck:
    """Top coefficient of I_{n+1,k}: (-1)^k / ((n+1)! (k+n+1)!)."""
    if n < 0 or k < -n:
        raise ParameterError(f"need n >= 0 and k >= -n, got n={n}, k={k}")
    lhs = top_coefficient(n + 1, k)
    rhs = Fraction((-1) ** (k % 2), math.factorial(n + 1) * math.factorial(k + n + 1))
    return compare_exact(R.TOP_COEFF, _p(n=n, k=k), lhs, rhs)


def _periodic_mean(f, nodes: int) -> float:
    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    return float(np.sum(f(theta)) / nodes)


def _series(term: Callable[[int], complex], start_check: int, K: int):
    """Sum term(0..K-1); converged once two consecutive terms are below the relative floor."""
    total = 0.0
    small = 0
    for j in range(K):
        tj = term(j)
        total += tj
        if j >= start_check and abs(tj) < SERIES_REL_STOP * abs(total):
            small += 1
            if small == 2:
                return total, True, j + 1
        else:
            small = 0
    return total, False, K


def check_byproduct(n, s, t, K_trunc=96, tol: Tolerance | None = None, nodes: int | None = None) -> RelationCheck:
    """Mean of e^{-st cos th} L_n(s^2+t^2+2st cos th) against its Laguerre-Bessel series."""
    s, t = float(s), float(t)
    if s == 0 or t == 0:
        raise ParameterError("byproduct identity needs nonzero s and t")
    st = s * t
    nodes = nodes or default_nodes(n, 0, s, t) + 32
    lhs = _periodic_mean(
        lambda th: np.exp(-st * np.cos(th)) * laguerre_eval_array(n, 0, s * s + t * t + 2 * st * np.cos(th)),
        nodes,
    )
    fn = math.factorial(n)

    def term(k):
        lag = laguerre_eval(n, k - n, s * s, bounded=False) * laguerre_eval(n, k - n, t * t, bounded=False)
        return fn / math.factorial(k) * st ** (k - n) * lag * bessel_j(k - n, st)

    rhs, converged, used = _series(term, n, K_trunc)
    params = _p(n=n, s=s, t=t, K_trunc=K_trunc)
    if not converged:
        return records.inconclusive(R.BYPRODUCT, params, lhs, rhs, f"series not converged after {used} terms")
    return compare(R.BYPRODUCT, params, lhs, rhs, tol or Tolerance(rel_tol=1e-9))


def check_bateman(n, x, y, theta, K_trunc=96, tol: Tolerance | None = None) -> RelationCheck:
    """exp(xy e^{i th}) L_n(x^2 + y^2 - 2xy cos th) against the truncated addition series."""
    x, y, theta = float(x), float(y), float(theta)
    if x * y == 0:
        raise ParameterError("addition formula is checked for nonzero x*y")
    w = x * y * cmath.exp(1j * theta)
    lhs = cmath.exp(w) * laguerre_eval(n, 0, x * x + y * y - 2 * x * y * math.cos(theta))
    fn = math.factorial(n)

    def term(j):
        lag = laguerre_eval(n, j - n, x * x, bounded=False) * laguerre_eval(n, j - n, y * y, bounded=False)
        return w ** (j - n) * (fn / math.factorial(j)) * lag

    rhs, converged, used = _series(term, n, K_trunc)
    params = _p(n=n, x=x, y=y, theta=theta, K_trunc=K_trunc)
    if not converged:
        return records.inconclusive(R.BATEMAN, params, lhs, rhs, f"series not converged after {used} terms")
    return compare(R.BATEMAN, params, complex(lhs), complex(rhs), tol or Tolerance(rel_tol=1e-9))


def check_base_case(k, s, t) -> RelationCheck:
    """I_{0,k} = (-1)^k (st)^k / k! for k >= 0, exactly."""
    s, t = as_fraction(s), as_fraction(t)
    lhs = closed_form_exact(0, k, s, t)
    rhs = (-1) ** k * (s * t) ** k / math.factorial(k)
    return compare_exact(R.BASE_CASE, _p(k=k, s=s, t=t), lhs, rhs)


def check_vanishing(n, k, s, t, abs_tol=1e-12, qcfg: QuadratureConfig | None = None) -> list[RelationCheck]:
    """For k < -n the quadrature is negligible and the residue is exactly zero."""
    if k >= -n:
        raise ParameterError(f"vanishing branch needs k < -n, got n={n}, k={k}")
    params = _p(n=n, k=k, s=float(s), t=float(t), method="quadrature")
    try:
        q = quadrature_integral(n, k, s, t, 0, qcfg)
        quad = compare(R.VANISH_BRANCH, params, q, 0.0, Tolerance(rel_tol=0.0, abs_tol=abs_tol))
    except NumericalInconsistencyError as exc:
        quad = records.errored(R.VANISH_BRANCH, params, str(exc))
    sq, tq = as_fraction(s), as_fraction(t)
    res = compare_exact(R.VANISH_BRANCH, _p(n=n, k=k, s=sq, t=tq, method="residue"), residue_exact(n, k, sq, tq), 0)
    return [quad, res]


def check_oracle_residue(n, k, s, t) -> RelationCheck:
    sq, tq = as_fraction(s), as_fraction(t)
    return compare_exact(R.ORACLE_RESIDUE, _p(n=n, k=k, s=sq, t=tq), residue_exact(n, k, sq, tq),
                         closed_form_exact(n, k, sq, tq))


def check_oracle_quadrature(n, k, s, t, tol: Tolerance | None = None,
                            qcfg: QuadratureConfig | None = None) -> RelationCheck:
    """Quadrature real part against the closed form; error measured against max(1, |I|)."""
    tol = tol or Tolerance()
    params = _p(n=n, k=k, s=float(s), t=float(t))
    try:
        q = quadrature_integral(n, k, s, t, 0, qcfg)
    except NumericalInconsistencyError as exc:
        return records.errored(R.ORACLE_QUADRATURE, params, str(exc))
    c = closed_form(n, k, s, t)
    err = abs(q.real - c)
    rel = err / max(1.0, abs(c))
    status = records.PASS if (err <= tol.abs_tol or rel <= tol.rel_tol) else records.FAIL
    return RelationCheck(R.ORACLE_QUADRATURE, params, q, c, err, rel, status)


# -- configuration, report, driver ----------------------------------------------------------


@dataclass
class SuiteConfig:
    n_max: int = 6
    k_min: int = -8
    k_max: int = 8
    grid: Sequence[tuple[float, float]] = DEFAULT_GRID
    seed: int = 42
    random_points: int = 6
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    bessel_K: int = 60
    series_K: int = 96
    thetas: Sequence[float] = DEFAULT_THETAS
    lag_samples: int = 2
    exact_relations: bool = True
    debug: bool = False
    fail_fast: bool = False
    workers: int | None = None

    def validate(self) -> SuiteConfig:
        if not 0 <= self.n_max < N_MAX:
            raise ParameterError(f"n_max must lie in 0..{N_MAX - 1}")
        if self.k_min > self.k_max:
            raise ParameterError("k_min exceeds k_max")
        if max(abs(self.k_min), abs(self.k_max)) + 1 > K_MAX:
            raise ParameterError(f"k range must stay within +-{K_MAX - 1}")
        if self.rel_tol < 0 or self.abs_tol < 0:
            raise ParameterError("tolerances must be non-negative")
        for s, t in self.grid:
            if not (math.isfinite(s) and math.isfinite(t)) or max(abs(s), abs(t)) > 6:
                raise ParameterError(f"grid point {(s, t)} outside |s|, |t| <= 6")
        if self.bessel_K < BESSEL_ELL_MAX + 8:
            raise ParameterError(f"bessel_K must be at least {BESSEL_ELL_MAX + 8}")
        return self

    def as_dict(self) -> dict:
        return {
            "n_max": self.n_max, "k_min": self.k_min, "k_max": self.k_max,
            "grid": [list(p) for p in self.grid], "seed": self.seed,
            "random_points": self.random_points, "rel_tol": self.rel_tol, "abs_tol": self.abs_tol,
            "bessel_K": self.bessel_K, "series_K": self.series_K, "thetas": list(self.thetas),
            "lag_samples": self.lag_samples, "exact_relations": self.exact_relations,
            "debug": self.debug, "fail_fast": self.fail_fast,
        }

    @property
    def tolerance(self) -> Tolerance:
        return Tolerance(self.rel_tol, self.abs_tol)


@dataclass
class RelationStats:
    attempted: int = 0
    passed: int = 0
    failed: int = 0
    inconclusive: int = 0
    worst_abs_err: float = 0.0
    worst_rel_err: float = 0.0

    def add(self, c: RelationCheck):
        self.attempted += 1
        if c.passed:
            self.passed += 1
        else:
            self.failed += 1
            if c.status == records.INCONCLUSIVE:
                self.inconclusive += 1
        if not math.isnan(c.abs_err):
            self.worst_abs_err = max(self.worst_abs_err, c.abs_err)
        if not math.isnan(c.rel_err):
            self.worst_rel_err = max(self.worst_rel_err, c.rel_err)


@dataclass
class VerificationReport:
    config: dict
    checks: list[RelationCheck]
    per_relation: dict[RelationId, RelationStats]
    duration_ms: float = 0.0

    @classmethod
    def from_checks(cls, config: dict, checks: Iterable[RelationCheck], duration_ms=0.0) -> VerificationReport:
        ordered = sorted(checks, key=RelationCheck.sort_key)
        stats = {rid: RelationStats() for rid in RelationId}
        for c in ordered:
            stats[c.relation_id].add(c)
        return cls(config, ordered, stats, duration_ms)

    @property
    def totals(self) -> RelationStats:
        tot = RelationStats()
        for c in self.checks:
            tot.add(c)
        return tot

    @property
    def failures(self) -> list[RelationCheck]:
        return [c for c in self.checks if not c.passed]

    @property
    def ok(self) -> bool:
        return not self.failures


def _points(cfg: SuiteConfig):
    """Grid points, positive-quadrant extras and sign-extension extras."""
    grid = [(float(s), float(t)) for s, t in cfg.grid]
    if not grid:
        return [], []
    rng = np.random.default_rng(cfg.seed)
    positive = grid + [tuple(float(v) for v in rng.uniform(0.2, 2.5, 2)) for _ in range(cfg.random_points)]
    signed = []
    while len(signed) < cfg.random_points:
        s, t = (float(v) for v in rng.uniform(-2.5, 2.5, 2))
        if abs(s * t) >= 0.05:
            signed.append((s, t))
    return positive, signed


@dataclass(frozen=True)
class _Task:
    relation_id: RelationId
    fn: Callable

    def __call__(self) -> list[RelationCheck]:
        try:
            out = self.fn()
        except (ParameterError, NumericalInconsistencyError, ArithmeticError) as exc:
            args = getattr(self.fn, "args", ())
            return [records.errored(self.relation_id, {"args": repr(args)}, f"{type(exc).__name__}: {exc}")]
        return out if isinstance(out, list) else [out]


def build_tasks(cfg: SuiteConfig) -> list[_Task]:
    tol = cfg.tolerance
    positive, signed = _points(cfg)
    grid = [(float(s), float(t)) for s, t in cfg.grid]
    positive_q = [(s, t) for s, t in positive if s > 0 and t > 0]
    tasks: list[_Task] = []

    def add(rid, fn, *args, **kw):
        tasks.append(_Task(rid, partial(fn, *args, **kw)))

    ks = range(cfg.k_min, cfg.k_max + 1)
    for n in range(cfg.n_max + 1):
        for k in ks:
            for s, t in positive_q:
                if n + 1 <= cfg.n_max and k >= -n:
                    add(R.DIFFEQ4, check_diffeq, n, k, s, t, tol, debug=cfg.debug)
                add(R.REL_FIRST, check_integral_relations_bounded, n, k, s, t, tol, cfg.n_max, False)
            if cfg.exact_relations:
                for s, t in grid:
                    if s > 0 and t > 0:
                        if n + 1 <= cfg.n_max and k >= -n:
                            add(R.DIFFEQ4, check_diffeq, n, k, s, t, tol, exact=True)
                        add(R.REL_FIRST, check_integral_relations_bounded, n, k, s, t, tol, cfg.n_max, True)
            for s, t in grid + signed:
                if k < -n:
                    add(R.VANISH_BRANCH, check_vanishing, n, k, s, t, cfg.abs_tol)
                else:
                    add(R.ORACLE_RESIDUE, check_oracle_residue, n, k, s, t)
                add(R.ORACLE_QUADRATURE, check_oracle_quadrature_or_vanish, n, k, s, t, tol)
            if k >= -n:
                if n + 1 <= cfg.n_max:
                    add(R.TOP_COEFF, check_top_coefficient, n, k)
                add(R.LAG_REC5, check_laguerre_recurrences_bounded, n, k, cfg.lag_samples, cfg.seed, cfg.n_max)
        for s, t in positive + signed:
            add(R.BYPRODUCT, check_byproduct, n, s, t, cfg.series_K, tol)
        for s, t in signed + positive:
            if abs(s * t) >= 0.1:
                for theta in cfg.thetas:
                    add(R.BATEMAN, check_bateman, n, s, t, theta, cfg.series_K, tol)
    for k in range(0, max(cfg.k_max, 0) + 1):
        for s, t in grid + signed:
            add(R.BASE_CASE, check_base_case, k, s, t)
    for ell in range(BESSEL_ELL_MAX + 1):
        for x in BESSEL_XS:
            add(R.BESSEL_DELTA, check_bessel_delta, ell, x, cfg.bessel_K, tol)
    for s, t in grid + signed:
        x = s * t
        if abs(x) <= 10:
            for theta in cfg.thetas:
                # unit-modulus lhs: relative and absolute error coincide
                add(R.JACOBI_ANGER, check_jacobi_anger, x, theta, jacobi_anger_order(x), Tolerance(cfg.rel_tol, 0.0))
    return tasks


def check_integral_relations_bounded(n, k, s, t, tol, n_max, exact):
    """Only the relations whose highest degree stays within n_max."""
    out = check_integral_relations(n, k, s, t, tol, exact) if n <= n_max else []
    if n + 1 > n_max:
        out = [c for c in out if c.relation_id != R.REL_FIFTH]
    return out


def check_laguerre_recurrences_bounded(m, k, samples, seed, n_max):
    out = check_laguerre_recurrences(m, k, samples, seed)
    if m + 1 > n_max:
        out = [c for c in out if c.relation_id == R.LAG_REC5]
    return out


def check_oracle_quadrature_or_vanish(n, k, s, t, tol):
    # the vanishing quadrature is covered by check_vanishing
    return [] if k < -n else check_oracle_quadrature(n, k, s, t, tol)


def resolve_workers(workers: int | None = None) -> int:
    if workers:
        return max(1, int(workers))
    env = os.environ.get("LAGUERRE_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ParameterError(f"LAGUERRE_THREADS must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


def run_suite(cfg: SuiteConfig | None = None,
              on_check: Callable[[RelationCheck], None] | None = None) -> VerificationReport:
    """Run every applicable check in ``cfg``; failures are collected, never raised."""
    cfg = (cfg or SuiteConfig()).validate()
    started = time.perf_counter()
    tasks = build_tasks(cfg)
    stop = threading.Event()
    lock = threading.Lock()
    done: list[RelationCheck] = []

    def run(task):
        if stop.is_set():
            return
        produced = task()
        with lock:
            for c in produced:
                if stop.is_set():
                    break
                done.append(c)
                if on_check is not None:
                    on_check(c)
                if cfg.fail_fast and not c.passed:
                    stop.set()

    workers = resolve_workers(cfg.workers)
    if workers == 1:
        for task in tasks:
            run(task)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(run, tasks))
    elapsed = (time.perf_counter() - started) * 1000.0
    return VerificationReport.from_checks(cfg.as_dict(), done, elapsed)
