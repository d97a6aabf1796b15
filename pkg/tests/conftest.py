import math

import pytest

from symslocc import dicke_state, ghz_state, normalize_state

SQRT2 = math.sqrt(2)


def mu_state(mu):
    """``(|GHZ_4> + mu |D_4^(2)>) / sqrt(1 + |mu|^2)``."""
    return normalize_state([1 / SQRT2, 0, mu, 0, 1 / SQRT2], 4)


@pytest.fixture
def dicke():
    return dicke_state


@pytest.fixture
def ghz():
    return ghz_state


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    RESULTS = getattr(mod, "RESULTS", None)
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS):
        ok, line = RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {line}")
