"""Command-line front door: run verification suites, emit text or JSON
reports, gate CI on the results.

Exit codes: 0 all gating checks verified; 1 at least one gating check failed
(or an oracle disagreement); 2 usage error; 3 internal error.  Every flag can
also be set through an environment variable with the QUADALG_ prefix
(QUADALG_SUITE, QUADALG_MODES, QUADALG_ORACLE, QUADALG_ORACLE_DEGREE,
QUADALG_FIT_CAP, QUADALG_FORMAT, QUADALG_OUT, QUADALG_JOBS, QUADALG_SEED).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .reports import SCHEMA_VERSION, strip_private
from .suites_bi_q import run_aw_suite, run_bannai_ito_suite, run_qhahn_suite
from .suites_classical import run_hahn_suite, run_racah_suite

SUITES = ("racah", "hahn", "bannai-ito", "aw", "qhahn")
_REQUIRED_MODES = {"racah": 6, "hahn": 4, "bannai-ito": 6, "qhahn": 4}


def _env(name, default=None):
    return os.environ.get("QUADALG_" + name, default)


def _env_int(name):
    v = _env(name)
    return None if v is None else int(v)


def build_parser():
    p = argparse.ArgumentParser(
        prog="quadalg",
        description="Exact verification suites for the Racah, Hahn, "
                    "Bannai-Ito, Askey-Wilson and q-Hahn algebra "
                    "realizations.",
        epilog="Environment overrides use the QUADALG_ prefix, e.g. "
               "QUADALG_SUITE=racah QUADALG_FORMAT=json.")
    p.add_argument("--suite", default=_env("SUITE", "all"),
                   choices=SUITES + ("all",),
                   help="suite to run (default: all)")
    p.add_argument("--modes", type=int, default=_env_int("MODES"),
                   help="mode-count override (validated per suite)")
    og = p.add_mutually_exclusive_group()
    og.add_argument("--oracle", dest="oracle", action="store_true",
                    help="cross-validate every check through the exact "
                         "representation oracle")
    og.add_argument("--no-oracle", dest="oracle", action="store_false")
    p.set_defaults(oracle=_env("ORACLE", "0") not in ("0", "", "false"))
    p.add_argument("--oracle-degree", type=int,
                   default=_env_int("ORACLE_DEGREE"),
                   help="witness-state degree cap for the oracle pass")
    p.add_argument("--fit-cap", type=int,
                   default=_env_int("FIT_CAP") or 2,
                   help="max central-coefficient degree for closure fits "
                        "(default 2)")
    p.add_argument("--format", default=_env("FORMAT", "text"),
                   choices=("text", "json"), help="report format")
    p.add_argument("--out", default=_env("OUT"),
                   help="write the report to this path instead of stdout")
    p.add_argument("--jobs", type=int, default=_env_int("JOBS") or 1,
                   help="parallel check evaluation width (default 1)")
    p.add_argument("--seed", type=int, default=_env_int("SEED") or 0,
                   help="seed for oracle sampling and specializations "
                        "(recorded in the report)")
    return p


def _run_one(name, args):
    kw = dict(oracle=args.oracle, seed=args.seed, jobs=args.jobs,
              oracle_degree=args.oracle_degree)
    if name == "racah":
        if args.modes not in (None, 6):
            raise UsageError("the racah suite requires 6 modes")
        return run_racah_suite(**kw)
    if name == "hahn":
        if args.modes not in (None, 4):
            raise UsageError("the hahn suite requires 4 modes")
        return run_hahn_suite(**kw)
    if name == "bannai-ito":
        if args.modes not in (None, 6):
            raise UsageError("the bannai-ito suite requires dimension 6")
        return run_bannai_ito_suite(**kw)
    if name == "aw":
        nmodes = args.modes if args.modes is not None else 6
        if nmodes < 4 or nmodes % 2:
            raise UsageError("the aw suite needs an even mode count >= 4")
        return run_aw_suite(fit_cap=args.fit_cap, nmodes=nmodes, **kw)
    if name == "qhahn":
        if args.modes not in (None, 4):
            raise UsageError("the qhahn suite requires 4 modes")
        return run_qhahn_suite(fit_cap=args.fit_cap, **kw)
    raise UsageError("unknown suite %r" % name)


class UsageError(Exception):
    pass


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    names = SUITES if args.suite == "all" else (args.suite,)
    t0 = time.perf_counter()
    reports = []
    for name in names:
        reports.append(strip_private(_run_one(name, args)))
    ok = all(r.passed for r in reports)

    if args.format == "json":
        if len(reports) == 1:
            payload = reports[0].to_json_dict()
        else:
            payload = {
                "schema_version": SCHEMA_VERSION,
                "suites": [r.to_json_dict() for r in reports],
                "summary": {"pass": ok,
                            "suites_failed": [r.suite for r in reports
                                              if not r.passed]},
                "elapsed_ms": round((time.perf_counter() - t0) * 1000, 3),
            }
        text = json.dumps(payload, indent=2)
    else:
        blocks = [r.render_text() for r in reports]
        blocks.append("overall: %s" % ("PASS" if ok else "FAIL"))
        text = "\n\n".join(blocks)

    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if ok else 1


def main(argv=None):
    try:
        return run(argv)
    except UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 2
    except SystemExit as exc:          # argparse uses code 2 for bad flags
        return exc.code if isinstance(exc.code, int) else 2
    except Exception as exc:           # internal failure contract
        print("internal error: %r" % exc, file=sys.stderr)
        import traceback
        traceback.print_exc()
        return 3


if __name__ == "__main__":
    sys.exit(main())
