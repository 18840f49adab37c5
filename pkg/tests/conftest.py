import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from quandle_census import quandles_up_to_iso  # noqa: E402

from quandle_lab import FiniteQuandle, dihedral  # noqa: E402

_ACCEPTANCE: dict[str, str] = {}


@pytest.fixture
def record_criterion():
    """Record one acceptance line; the outcome is filled in when the test finishes."""

    def record(key, text):
        _ACCEPTANCE[key] = text

    return record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    key = getattr(item.function, "criterion", None)
    if key is not None and rep.when == "call":
        status = "PASS" if rep.passed else "FAIL"
        item.config._acceptance = getattr(item.config, "_acceptance", [])
        item.config._acceptance.append((key, status, _ACCEPTANCE.get(key, item.name)))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = getattr(config, "_acceptance", [])
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for key, status, text in sorted(rows):
        terminalreporter.write_line(f"[{status}] {key}: {text}")


@pytest.fixture(scope="session")
def small_quandles():
    """One representative of every isomorphism class of quandles of order <= 5."""
    out = []
    for n in range(1, 6):
        for k, table in enumerate(quandles_up_to_iso(n)):
            out.append(FiniteQuandle(table, f"Q{n}_{k}"))
    return out


@pytest.fixture(scope="session")
def R3():
    return dihedral(3)
