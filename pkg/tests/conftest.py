"""Session-shared suite reports: the heavy suites run once and every test
module (including the acceptance gate) reads the same results."""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from quadalg.suites_classical import run_hahn_suite, run_racah_suite  # noqa: E402
from quadalg.suites_bi_q import (run_aw_suite, run_bannai_ito_suite,  # noqa: E402
                                 run_qhahn_suite)

SEED = 11


@pytest.fixture(scope="session")
def racah_report():
    return run_racah_suite(oracle=True, seed=SEED)


@pytest.fixture(scope="session")
def hahn_report():
    return run_hahn_suite(oracle=True, seed=SEED)


@pytest.fixture(scope="session")
def bi_report():
    return run_bannai_ito_suite(oracle=True, seed=SEED)


@pytest.fixture(scope="session")
def aw_report():
    return run_aw_suite(oracle=True, seed=SEED)


@pytest.fixture(scope="session")
def qhahn_report():
    return run_qhahn_suite(oracle=True, seed=SEED)
