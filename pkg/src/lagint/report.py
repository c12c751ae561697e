"""Serialization of checks and verification reports."""

from __future__ import annotations

import json
import math
from fractions import Fraction

from .polynomial import RationalPoly
from .records import RelationCheck
from .suite import RelationStats, VerificationReport

SCHEMA_VERSION = "1.0"

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema_version", "config", "relations", "summary"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "config": {"type": "object"},
        "relations": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["relation_id", "params", "lhs", "rhs", "abs_err", "rel_err", "pass"],
                "properties": {
                    "relation_id": {"type": "string"},
                    "params": {"type": "object"},
                    "abs_err": {"type": ["number", "null"]},
                    "rel_err": {"type": ["number", "null"]},
                    "pass": {"type": "boolean"},
                    "status": {"enum": ["pass", "fail", "inconclusive"]},
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["attempted", "passed", "failed", "worst_abs_err", "worst_rel_err", "duration_ms"],
        },
    },
}


def jsonable(v):
    """Exact values become strings ("p/q", coefficient lists); complex becomes {re, im}."""
    if v is None or isinstance(v, (bool, int, str)):
        return v
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, RationalPoly):
        return {"offset": v.offset, "coeffs": [str(c) for c in v.coeffs]}
    if isinstance(v, complex):
        return {"re": jsonable(v.real), "im": jsonable(v.imag)}
    if isinstance(v, float) or hasattr(v, "__float__"):
        f = float(v)
        return f if math.isfinite(f) else None
    if isinstance(v, dict):
        return {str(k): jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [jsonable(x) for x in v]
    return repr(v)


def check_to_dict(c: RelationCheck) -> dict:
    d = {
        "relation_id": c.relation_id.value,
        "params": jsonable(c.params),
        "lhs": jsonable(c.lhs),
        "rhs": jsonable(c.rhs),
        "abs_err": jsonable(c.abs_err),
        "rel_err": jsonable(c.rel_err),
        "pass": c.passed,
        "status": c.status,
        "exact": c.exact,
    }
    if c.note:
        d["note"] = c.note
    return d


def _stats_dict(st: RelationStats) -> dict:
    return {
        "attempted": st.attempted,
        "passed": st.passed,
        "failed": st.failed,
        "inconclusive": st.inconclusive,
        "worst_abs_err": jsonable(st.worst_abs_err),
        "worst_rel_err": jsonable(st.worst_rel_err),
    }


def report_to_dict(report: VerificationReport, include_passing: bool = True) -> dict:
    summary = _stats_dict(report.totals)
    summary["duration_ms"] = round(report.duration_ms, 3)
    summary["per_relation"] = {rid.value: _stats_dict(st) for rid, st in report.per_relation.items()}
    checks = report.checks if include_passing else report.failures
    return {
        "schema_version": SCHEMA_VERSION,
        "config": jsonable(report.config),
        "relations": [check_to_dict(c) for c in checks],
        "summary": summary,
    }


def check_line(c: RelationCheck) -> str:
    return json.dumps({"record": "check", **check_to_dict(c)}, allow_nan=False)


def render_text(report: VerificationReport, max_failures: int = 20) -> str:
    rows = [f"{'relation':<18} {'attempted':>9} {'passed':>7} {'failed':>7} {'worst_abs':>10} {'worst_rel':>10}"]
    for rid, st in report.per_relation.items():
        if not st.attempted:
            continue
        rows.append(
            f"{rid.value:<18} {st.attempted:>9} {st.passed:>7} {st.failed:>7} "
            f"{st.worst_abs_err:>10.2e} {st.worst_rel_err:>10.2e}"
        )
    tot = report.totals
    rows.append(
        f"{'TOTAL':<18} {tot.attempted:>9} {tot.passed:>7} {tot.failed:>7} "
        f"{tot.worst_abs_err:>10.2e} {tot.worst_rel_err:>10.2e}"
    )
    fails = report.failures
    if fails:
        rows.append("")
        rows.append(f"{len(fails)} failing instance(s):")
        for c in fails[:max_failures]:
            rows.append(f"  {c.relation_id.value} {c.params} abs_err={c.abs_err:.3e} rel_err={c.rel_err:.3e} {c.note}")
        if len(fails) > max_failures:
            rows.append(f"  ... {len(fails) - max_failures} more")
    rows.append(f"duration: {report.duration_ms / 1000:.2f} s")
    return "\n".join(rows)
