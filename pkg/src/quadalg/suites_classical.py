"""Verification suites for the oscillator realizations: the Racah commutant
presentation on six modes and the Hahn presentation on four.

Every check is a normal-form zero test (or an expected-nonzero test) of a
single Element; with the oracle enabled each check is re-evaluated through
the exact Bargmann model and the verdicts are compared.
"""

from __future__ import annotations

import time
from fractions import Fraction
from types import SimpleNamespace

from .checkkit import OracleBudget, Spec, engine_pass, oracle_pass
from .engine import anticommutator, commutator
from .oracle import OracleWeylBackend
from .reports import CheckRunner, SuiteReport
from .weyl import (WeylContext, hahn_central, hahn_generators, racah_central,
                   racah_generators)

ENGINE_VERSION = "quadalg-0.1.0"


def _racah_workspace(backend=None):
    ctx = WeylContext(6, backend=backend)
    ws = SimpleNamespace(ctx=ctx)
    ws.K1, ws.K2, ws.K3 = racah_generators(ctx)
    ws.d, ws.e1, ws.e2 = racah_central(ctx)
    ws.su_all = ctx.su11(tuple(range(1, 7)))
    ws.L = {(m, n): ctx.L(m, n) for m in range(1, 7) for n in range(m + 1, 7)}
    ws.planes = {(1, 2): ws.L[(1, 2)], (3, 4): ws.L[(3, 4)],
                 (5, 6): ws.L[(5, 6)]}
    return ws


def _racah_specs():
    specs = []
    specs.append(Spec(
        "racah.a.def_K3", "a", "K3 := [K1,K2] (definitional)",
        lambda ws: commutator(ws.K1, ws.K2) - ws.K3))
    specs.append(Spec(
        "racah.b.CR23", "b",
        "[K2,K3] = K2^2 + {K1,K2} + d K2 + e1",
        lambda ws: commutator(ws.K2, ws.K3) - ws.K2 * ws.K2
        - anticommutator(ws.K1, ws.K2) - ws.d * ws.K2 - ws.e1))
    specs.append(Spec(
        "racah.c.CR31", "c",
        "[K3,K1] = K1^2 + {K1,K2} + d K1 + e2",
        lambda ws: commutator(ws.K3, ws.K1) - ws.K1 * ws.K1
        - anticommutator(ws.K1, ws.K2) - ws.d * ws.K1 - ws.e2))
    for zname in ("d", "e1", "e2"):
        for kname in ("K1", "K2"):
            specs.append(Spec(
                "racah.d.central.%s.%s" % (zname, kname), "d",
                "[%s, %s] = 0 (centrality)" % (zname, kname),
                lambda ws, z=zname, k=kname: commutator(
                    getattr(ws, z), getattr(ws, k))))
    for kname in ("K1", "K2", "K3"):
        for plane in ((1, 2), (3, 4), (5, 6)):
            specs.append(Spec(
                "racah.e.commutant.%s.L%d%d" % ((kname,) + plane), "e",
                "[%s, L_%d%d] = 0 (commutant of o(2)+o(2)+o(2))"
                % ((kname,) + plane),
                lambda ws, k=kname, p=plane: commutator(
                    getattr(ws, k), ws.planes[p])))
    specs.append(Spec(
        "racah.f.pairing.1234", "f", "C^(1234) + 2 K1 = 0 (Howe pairing)",
        lambda ws: ws.ctx.su11_casimir((1, 2, 3, 4)) + 2 * ws.K1))
    specs.append(Spec(
        "racah.f.pairing.3456", "f", "C^(3456) + 2 K2 = 0 (Howe pairing)",
        lambda ws: ws.ctx.su11_casimir((3, 4, 5, 6)) + 2 * ws.K2))
    for m in range(1, 7):
        for n in range(m + 1, 7):
            specs.append(Spec(
                "racah.g.su11pair.%d%d" % (m, n), "g",
                "C^(%d%d) + 1/4 (L_%d%d^2 + 1) = 0" % (m, n, m, n),
                lambda ws, m=m, n=n: ws.ctx.su11_casimir((m, n))
                + (ws.L[(m, n)] ** 2 + ws.ctx.one()) * Fraction(1, 4)))
    for jname in ("j0", "jplus", "jminus"):
        for m in range(1, 7):
            for n in range(m + 1, 7):
                specs.append(Spec(
                    "racah.h.howe.%s.L%d%d" % (jname, m, n), "h",
                    "[%s^(1..6), L_%d%d] = 0 (Howe commutation)"
                    % (jname.replace("j", "J"), m, n),
                    lambda ws, j=jname, m=m, n=n: commutator(
                        getattr(ws.su_all, j), ws.L[(m, n)])))
    return specs


def run_racah_suite(oracle=False, seed=0, jobs=1, oracle_degree=None):
    t0 = time.perf_counter()
    runner = CheckRunner()
    specs = _racah_specs()
    ws = _racah_workspace()
    engine_pass(runner, specs, ws, jobs)
    if oracle:
        ob = OracleWeylBackend(6)
        budget = OracleBudget(degree_cap=oracle_degree or 5, sample=30, high=5)
        oracle_pass(runner.checks, specs, [_racah_workspace(ob)], [ob.model],
                    seed=seed, budget=budget)
    stats = dict(ws.ctx.backend.stats)
    return SuiteReport(
        "racah", {"modes": 6, "family": "weyl", "seed": seed},
        runner.checks,
        meta={"engine": ENGINE_VERSION, "oracle": bool(oracle),
              "pair_products": stats["pair_products"]},
        elapsed_s=time.perf_counter() - t0)


def _hahn_workspace(backend=None):
    ctx = WeylContext(4, backend=backend)
    ws = SimpleNamespace(ctx=ctx)
    ws.M1, ws.M2, ws.M3 = hahn_generators(ctx)
    ws.delta1, ws.delta2 = hahn_central(ctx)
    ws.su12 = ctx.su11((1, 2))
    ws.su34 = ctx.su11((3, 4))
    ws.C12 = ws.su12.casimir()
    ws.C34 = ws.su34.casimir()
    ws.J0sum = ws.su12.j0 + ws.su34.j0
    return ws


def _hahn_specs():
    specs = []
    specs.append(Spec(
        "hahn.a.def_M3", "a", "M3 := [M1,M2] (definitional)",
        lambda ws: commutator(ws.M1, ws.M2) - ws.M3))
    specs.append(Spec(
        "hahn.b.RL23", "b", "[M2,M3] = -2{M1,M2} + delta1",
        lambda ws: commutator(ws.M2, ws.M3)
        + 2 * anticommutator(ws.M1, ws.M2) - ws.delta1))
    specs.append(Spec(
        "hahn.c.RL31", "c", "[M3,M1] = -2 M1^2 - 4 M2 + delta2",
        lambda ws: commutator(ws.M3, ws.M1) + 2 * ws.M1 * ws.M1
        + 4 * ws.M2 - ws.delta2))
    for zname in ("delta1", "delta2"):
        for mname in ("M1", "M2"):
            specs.append(Spec(
                "hahn.d.central.%s.%s" % (zname, mname), "d",
                "[%s, %s] = 0 (centrality)" % (zname, mname),
                lambda ws, z=zname, m=mname: commutator(
                    getattr(ws, z), getattr(ws, m))))
    specs.append(Spec(
        "hahn.e.abstract.delta1", "e",
        "delta1 = 4 (J0^(12)+J0^(34)) (C^(12)-C^(34))",
        lambda ws: 4 * (ws.J0sum * (ws.C12 - ws.C34)) - ws.delta1))
    specs.append(Spec(
        "hahn.e.abstract.delta2", "e",
        "delta2 = 2 (J0^(12)+J0^(34))^2 + (C^(12)+C^(34)) "
        "(as printed; known source discrepancy, see delta2_corrected)",
        lambda ws: 2 * (ws.J0sum * ws.J0sum) + (ws.C12 + ws.C34) - ws.delta2))
    specs.append(Spec(
        "hahn.e.abstract.delta2_corrected", "e",
        "delta2 = 2 (J0^(12)+J0^(34))^2 + 4 (C^(12)+C^(34)) "
        "(coefficient-4 variant; verifies exactly)",
        lambda ws: 2 * (ws.J0sum * ws.J0sum) + 4 * (ws.C12 + ws.C34)
        - ws.delta2,
        gating=False))
    specs.append(Spec(
        "hahn.f.M1_form", "f", "M1 = J0^(12) - J0^(34)",
        lambda ws: ws.M1 - (ws.su12.j0 - ws.su34.j0)))
    specs.append(Spec(
        "hahn.f.M2_form", "f", "M2 = C^(1234) (total su(1,1) Casimir)",
        lambda ws: ws.M2 - ws.ctx.su11_casimir((1, 2, 3, 4))))
    return specs


def run_hahn_suite(oracle=False, seed=0, jobs=1, oracle_degree=None):
    t0 = time.perf_counter()
    runner = CheckRunner()
    specs = _hahn_specs()
    ws = _hahn_workspace()
    engine_pass(runner, specs, ws, jobs)
    if oracle:
        ob = OracleWeylBackend(4)
        budget = OracleBudget(degree_cap=oracle_degree or 5, sample=30, high=5)
        oracle_pass(runner.checks, specs, [_hahn_workspace(ob)], [ob.model],
                    seed=seed, budget=budget)
    stats = dict(ws.ctx.backend.stats)
    return SuiteReport(
        "hahn", {"modes": 4, "family": "weyl", "seed": seed},
        runner.checks,
        meta={"engine": ENGINE_VERSION, "oracle": bool(oracle),
              "pair_products": stats["pair_products"]},
        elapsed_s=time.perf_counter() - t0)
