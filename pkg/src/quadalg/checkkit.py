"""Shared machinery for the verification suites: check specifications
evaluated once over the symbolic engine and optionally re-evaluated over the
exact representation oracle, with verdict agreement recorded per check.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .oracle import witness_states
from .reports import FAILED, VERIFIED, CheckReport


@dataclass
class Spec:
    check_id: str
    group: str
    statement: str
    make: object                 # callable(workspace) -> residual-like
    kind: str = "zero"           # "zero" | "nonzero"
    gating: bool = True


def engine_pass(runner, specs, ws, jobs=1):
    """Evaluate every spec against the engine workspace, in spec order."""
    def task(spec):
        t0 = time.perf_counter()
        resid = spec.make(ws)
        return resid, time.perf_counter() - t0

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(task, specs))
    else:
        results = [task(s) for s in specs]
    for spec, (resid, dt) in zip(specs, results):
        n = resid.n_terms
        if spec.kind == "zero":
            status = VERIFIED if n == 0 else FAILED
            witness = n
        else:
            ok = n > 0
            status = VERIFIED if ok else FAILED
            witness = 0 if ok else 1
        rep = CheckReport(spec.check_id, spec.group, spec.statement, status,
                          witness, dt, spec.gating, {})
        rep.details["_residual"] = resid
        if spec.kind == "nonzero":
            rep.details["term_count"] = n
            rep.details["expect"] = "nonzero"
        runner.checks.append(rep)


@dataclass
class OracleBudget:
    """Witness-state budget for the oracle pass.

    States of total degree <= min(ann_bound, degree_cap) + margin are always
    scanned; ``sample`` extra seeded states up to component bound ``high``
    guard the diagonal directions.
    """

    degree_cap: int = 6
    margin: int = 2
    sample: int = 40
    high: int = 6


def oracle_pass(checks, specs, workspaces, models, seed=0,
                budget=OracleBudget()):
    """Re-evaluate specs over oracle workspaces; annotate agreement.

    ``workspaces``: one per specialization (a single entry for exact-field
    families).  The oracle calls an element zero only if it vanishes on every
    workspace; agreement compares that with the engine verdict.
    """
    by_id = {c.check_id: c for c in checks}
    reps_per_ws = []
    for ws in workspaces:
        reps_per_ws.append([spec.make(ws) for spec in specs])
    rng = random.Random(seed)
    for si, spec in enumerate(specs):
        check = by_id[spec.check_id]
        t0 = time.perf_counter()
        zero_everywhere = True
        for wi, model in enumerate(models):
            rep = reps_per_ws[wi][si]
            bound = min(rep.ann_bound, budget.degree_cap) + budget.margin
            states = witness_states(model, bound, rng, budget.sample,
                                    budget.high)
            if not rep.is_zero_on(states):
                zero_everywhere = False
                break
        engine_zero = (check.status == VERIFIED) if spec.kind == "zero" \
            else (check.status != VERIFIED)
        check.details["oracle"] = (
            "agree" if zero_everywhere == engine_zero else "disagree")
        check.details["oracle_elapsed_ms"] = round(
            (time.perf_counter() - t0) * 1000, 3)
