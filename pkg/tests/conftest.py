import os

import pytest

ACCEPTANCE: dict[int, tuple[str, bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running check, enabled by BIDEND_SLOW=1")


def pytest_collection_modifyitems(config, items):
    if os.environ.get("BIDEND_SLOW") == "1":
        return
    skip = pytest.mark.skip(reason="set BIDEND_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}")
