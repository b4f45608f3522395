import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

SESSION_START = time.perf_counter()
FIXTURE_DIR = Path(__file__).resolve().parents[1] / "fixtures"

_acceptance: dict = {}


@pytest.fixture
def fixture_dir():
    return FIXTURE_DIR


def pytest_collection_modifyitems(config, items):
    # wall-clock criterion must run after everything else
    last = [it for it in items if it.get_closest_marker("run_last")]
    rest = [it for it in items if not it.get_closest_marker("run_last")]
    items[:] = rest + last


def pytest_configure(config):
    config.addinivalue_line("markers", "run_last: run after every other test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        prev = _acceptance.get(number, (title, True))
        _acceptance[number] = (title, prev[1] and rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        title, ok = _acceptance[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}")
