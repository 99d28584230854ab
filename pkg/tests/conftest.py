from __future__ import annotations

import pytest

from tavoid.atlas.catalog import construct
from tavoid.designs import profile

_ACCEPTANCE: dict[str, str] = {}


class ProfileStore:
    """Full profiles, enumerated at most once per test session."""

    def __init__(self):
        self._cache = {}

    def __call__(self, code_id: str):
        if code_id not in self._cache:
            self._cache[code_id] = profile(construct(code_id))
        return self._cache[code_id]


@pytest.fixture(scope="session")
def profiles() -> ProfileStore:
    return ProfileStore()


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        doc = report.nodeid.split("::")[-1]
        _ACCEPTANCE[doc] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, verdict in sorted(_ACCEPTANCE.items()):
        terminalreporter.write_line(f"{verdict}  {name}")
