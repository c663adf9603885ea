"""Check and suite reports with deterministic ordering and a stable JSON
schema (schema_version 1).

residual_terms counts the monomials witnessing a failure, so it is 0 exactly
when the check verified; for expected-nonzero checks the witness count is 0
on success and 1 on failure, with the actual term count in details.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

SCHEMA_VERSION = 1

VERIFIED = "verified"
FAILED = "failed"
INDETERMINATE = "indeterminate"


@dataclass
class CheckReport:
    check_id: str
    group: str
    statement: str
    status: str
    residual_terms: int
    elapsed_s: float
    gating: bool = True
    details: dict = field(default_factory=dict)

    @property
    def verified(self):
        return self.status == VERIFIED

    def to_json_dict(self):
        out = {
            "id": self.check_id,
            "group": self.group,
            "statement": self.statement,
            "status": self.status,
            "residual_terms": self.residual_terms,
            "elapsed_ms": round(self.elapsed_s * 1000, 3),
            "gating": self.gating,
        }
        if not self.gating:
            out["tag"] = "informative"
        if self.details:
            out["details"] = self.details
        return out


@dataclass
class SuiteReport:
    suite: str
    context: dict
    checks: list
    meta: dict = field(default_factory=dict)
    elapsed_s: float = 0.0

    @property
    def passed(self):
        return all(c.verified for c in self.checks if c.gating) and \
            not self.oracle_disagreements

    @property
    def oracle_disagreements(self):
        return [c.check_id for c in self.checks
                if c.details.get("oracle") == "disagree"]

    def summary(self):
        gating = [c for c in self.checks if c.gating]
        info = [c for c in self.checks if not c.gating]
        return {
            "total": len(self.checks),
            "gating": len(gating),
            "gating_verified": sum(c.verified for c in gating),
            "gating_failed": sum(not c.verified for c in gating),
            "informative": len(info),
            "informative_failed": sum(not c.verified for c in info),
            "oracle_disagreements": self.oracle_disagreements,
            "pass": self.passed,
        }

    def to_json_dict(self):
        return {
            "schema_version": SCHEMA_VERSION,
            "suite": self.suite,
            "context": self.context,
            "meta": self.meta,
            "checks": [c.to_json_dict() for c in self.checks],
            "summary": self.summary(),
            "elapsed_ms": round(self.elapsed_s * 1000, 3),
        }

    def to_json(self, indent=2):
        return json.dumps(self.to_json_dict(), indent=indent)

    def render_text(self):
        lines = ["suite %s  (context %s)" % (self.suite, self.context)]
        for c in self.checks:
            mark = "ok " if c.verified else "FAIL"
            tag = "" if c.gating else " [informative]"
            oracle = c.details.get("oracle")
            osuffix = "" if oracle in (None, "n/a") else "  oracle=%s" % oracle
            lines.append("  %s %-42s %s  residual_terms=%d%s%s"
                         % (mark, c.check_id, c.statement[:70],
                            c.residual_terms, tag, osuffix))
        s = self.summary()
        lines.append("  => %d checks, %d gating verified, %d failed, "
                     "%d informative (%d failed), pass=%s"
                     % (s["total"], s["gating_verified"], s["gating_failed"],
                        s["informative"], s["informative_failed"], s["pass"]))
        return "\n".join(lines)


class CheckRunner:
    """Collects CheckReports; zero/nonzero checks take residual thunks."""

    def __init__(self):
        self.checks = []

    def zero(self, check_id, group, statement, thunk, gating=True, details=None):
        t0 = time.perf_counter()
        resid = thunk()
        dt = time.perf_counter() - t0
        n = resid.n_terms
        rep = CheckReport(check_id, group, statement,
                          VERIFIED if n == 0 else FAILED, n, dt, gating,
                          dict(details or {}))
        rep.details["_residual"] = resid
        self.checks.append(rep)
        return rep

    def nonzero(self, check_id, group, statement, thunk, gating=True,
                details=None):
        t0 = time.perf_counter()
        elem = thunk()
        dt = time.perf_counter() - t0
        ok = not elem.is_zero()
        rep = CheckReport(check_id, group, statement,
                          VERIFIED if ok else FAILED, 0 if ok else 1, dt,
                          gating, dict(details or {}))
        rep.details["term_count"] = elem.n_terms
        rep.details["_residual"] = elem
        rep.details["expect"] = "nonzero"
        self.checks.append(rep)
        return rep

    def outcome(self, check_id, group, statement, ok, residual_terms=0,
                elapsed_s=0.0, gating=True, details=None):
        rep = CheckReport(check_id, group, statement,
                          VERIFIED if ok else FAILED,
                          0 if ok else max(1, residual_terms), elapsed_s,
                          gating, dict(details or {}))
        self.checks.append(rep)
        return rep


def strip_private(report):
    """Drop in-memory-only detail entries (engine residual Elements)."""
    for c in report.checks:
        c.details.pop("_residual", None)
    return report
