"""Check records shared by the Bessel and identity modules."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .polynomial import RationalPoly


class RelationId(str, enum.Enum):
    DIFFEQ4 = "DIFFEQ4"
    REL_FIRST = "REL_FIRST"
    REL_SECOND = "REL_SECOND"
    REL_THIRD = "REL_THIRD"
    REL_FOURTH = "REL_FOURTH"
    REL_FIFTH = "REL_FIFTH"
    LAG_REC5 = "LAG_REC5"
    LAG_REC6 = "LAG_REC6"
    LAG_REC7 = "LAG_REC7"
    TOP_COEFF = "TOP_COEFF"
    BESSEL_DELTA = "BESSEL_DELTA"
    JACOBI_ANGER = "JACOBI_ANGER"
    BYPRODUCT = "BYPRODUCT"
    BATEMAN = "BATEMAN"
    BASE_CASE = "BASE_CASE"
    VANISH_BRANCH = "VANISH_BRANCH"
    ORACLE_RESIDUE = "ORACLE_RESIDUE"
    ORACLE_QUADRATURE = "ORACLE_QUADRATURE"

    def __str__(self):
        return self.value


PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass
class RelationCheck:
    relation_id: RelationId
    params: dict[str, Any]
    lhs: Any
    rhs: Any
    abs_err: float
    rel_err: float
    status: str
    exact: bool = False
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def sort_key(self):
        return (self.relation_id.value, sorted((k, repr(v)) for k, v in self.params.items()))


@dataclass(frozen=True)
class Tolerance:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12

    def accepts(self, abs_err: float, rel_err: float) -> bool:
        return abs_err <= self.abs_tol or rel_err <= self.rel_tol


def _magnitude(v) -> float:
    if isinstance(v, complex):
        return max(abs(v.real), abs(v.imag))
    return abs(float(v))


def compare(relation_id, params, lhs, rhs, tol: Tolerance, note: str = "", floor: float = 0.0) -> RelationCheck:
    """Floating comparison; complex values are compared componentwise.

    ``rel_err`` is ``abs_err / max(|lhs|, |rhs|, floor)``.
    """
    diff = lhs - rhs
    abs_err = _magnitude(complex(diff)) if isinstance(diff, complex) else abs(float(diff))
    scale = max(_magnitude(lhs), _magnitude(rhs), floor)
    if not math.isfinite(abs_err):
        rel_err = math.inf
    elif abs_err == 0:
        rel_err = 0.0
    else:
        rel_err = abs_err / scale if scale > 0 else math.inf
    status = PASS if tol.accepts(abs_err, rel_err) else FAIL
    return RelationCheck(RelationId(relation_id), dict(params), lhs, rhs, abs_err, rel_err, status, note=note)


def _as_poly(v) -> RationalPoly:
    return v if isinstance(v, RationalPoly) else RationalPoly.constant(v)


def _max_abs(p: RationalPoly) -> Fraction:
    return max((abs(c) for c in p.coeffs), default=Fraction(0))


def compare_exact(relation_id, params, lhs, rhs, note: str = "") -> RelationCheck:
    """Exact comparison of Fractions or RationalPolys: passes iff equal."""
    if isinstance(lhs, RationalPoly) or isinstance(rhs, RationalPoly):
        lp, rp = _as_poly(lhs), _as_poly(rhs)
        abs_err = _max_abs(lp - rp)
        scale = max(_max_abs(lp), _max_abs(rp))
    else:
        abs_err = abs(Fraction(lhs) - Fraction(rhs))
        scale = max(abs(Fraction(lhs)), abs(Fraction(rhs)))
    rel_err = 0.0 if abs_err == 0 else (float(abs_err / scale) if scale else math.inf)
    status = PASS if abs_err == 0 else FAIL
    return RelationCheck(
        RelationId(relation_id), dict(params), lhs, rhs, float(abs_err), rel_err, status, exact=True, note=note
    )


def inconclusive(relation_id, params, lhs, rhs, note: str) -> RelationCheck:
    return RelationCheck(RelationId(relation_id), dict(params), lhs, rhs, math.nan, math.nan, INCONCLUSIVE, note=note)


def errored(relation_id, params, note: str) -> RelationCheck:
    return RelationCheck(RelationId(relation_id), dict(params), None, None, math.inf, math.inf, FAIL, note=note)
