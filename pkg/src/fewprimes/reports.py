"""Machine-checkable inequality records.

A check is exact (integers or rationals compared with no rounding), log-space
(natural logs at 256-bit precision, compared with absolute slack 1e-9), or
report-only (the statement hides a constant, so ``holds`` is informational).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

LOG_PREC_BITS = 256
LOG_SLACK = mpmath.mpf("1e-9")

_RELATIONS = ("<=", ">=", "=")


@dataclass(frozen=True)
class CheckReport:
    name: str
    lhs: object
    rhs: object
    relation: str
    holds: bool
    mode: str = "exact"  # "exact", "log" or "report"
    context: dict = field(default_factory=dict)

    @property
    def assertion(self) -> bool:
        """True when a failure of this check means a bug."""
        return self.mode != "report"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "holds": self.holds,
            "relation": self.relation,
            "mode": self.mode,
            "lhs": format_number(self.lhs),
            "rhs": format_number(self.rhs),
            "context": {k: format_number(v) for k, v in sorted(self.context.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def format_number(v):
    """Exact values as strings; high-precision reals tagged with their precision."""
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, (int, Fraction)):
        return str(v)
    if isinstance(v, mpmath.mpf):
        with mpmath.workprec(LOG_PREC_BITS):
            return f"mpf{LOG_PREC_BITS}:{mpmath.nstr(v, 40)}"
    if isinstance(v, float):
        return f"f64:{v!r}"
    if isinstance(v, (list, tuple)):
        return [format_number(x) for x in v]
    return str(v)


def _compare(lhs, rhs, relation):
    if relation == "<=":
        return lhs <= rhs
    if relation == ">=":
        return lhs >= rhs
    if relation == "=":
        return lhs == rhs
    raise ValueError(f"unknown relation {relation!r}")


def exact_check(name: str, lhs, rhs, relation: str, **context) -> CheckReport:
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    lhs_out = lhs.numerator if lhs.denominator == 1 else lhs
    rhs_out = rhs.numerator if rhs.denominator == 1 else rhs
    return CheckReport(name, lhs_out, rhs_out, relation, _compare(lhs, rhs, relation), "exact", context)


def log_of(value) -> mpmath.mpf:
    """Natural log of a positive int/Fraction at working precision."""
    q = Fraction(value)
    if q <= 0:
        raise ValueError("log of a nonpositive value")
    with mpmath.workprec(LOG_PREC_BITS):
        return mpmath.log(mpmath.mpf(q.numerator)) - mpmath.log(mpmath.mpf(q.denominator))


def log_product(terms) -> mpmath.mpf:
    """``log(prod base**exponent)`` for (positive base, rational exponent) pairs."""
    with mpmath.workprec(LOG_PREC_BITS):
        total = mpmath.mpf(0)
        for base, exponent in terms:
            e = Fraction(exponent)
            if e == 0:
                continue
            total += log_of(base) * mpmath.mpf(e.numerator) / e.denominator
        return total


def log_check(name: str, log_lhs, log_rhs, relation: str, **context) -> CheckReport:
    """Compare logs with absolute slack; ``-inf`` is allowed for a zero side."""
    with mpmath.workprec(LOG_PREC_BITS):
        if relation == "<=":
            holds = log_lhs <= log_rhs + LOG_SLACK
        elif relation == ">=":
            holds = log_lhs + LOG_SLACK >= log_rhs
        else:
            holds = abs(log_lhs - log_rhs) <= LOG_SLACK
    return CheckReport(name, log_lhs, log_rhs, relation, bool(holds), "log", context)


def report_only(name: str, lhs, rhs, relation: str, holds: bool, **context) -> CheckReport:
    return CheckReport(name, lhs, rhs, relation, holds, "report", context)


def reports_to_csv(reports, stream=None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["name", "holds", "mode", "lhs", "relation", "rhs", "params"])
    for r in reports:
        d = r.to_dict()
        params = json.dumps(d["context"], separators=(",", ":"), sort_keys=True)
        w.writerow([r.name, "true" if r.holds else "false", r.mode, d["lhs"], r.relation, d["rhs"], params])
    text = buf.getvalue()
    if stream is not None:
        stream.write(text)
    return text
