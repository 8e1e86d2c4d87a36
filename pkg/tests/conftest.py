import re

import pytest

from weylinv import characters

_CRITERIA: dict[int, list] = {}
_NAME = re.compile(r"test_criterion_(\d+)_(\w+?)(\[|$)")


@pytest.hookimpl(tryfirst=True)
def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    m = _NAME.search(report.nodeid.split("::")[-1])
    if not m:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        entry = _CRITERIA.setdefault(int(m.group(1)), [m.group(2), True, 0.0])
        entry[1] = entry[1] and report.passed
        entry[2] += report.duration


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        label, ok, secs = _CRITERIA[num]
        terminalreporter.write_line(
            f"criterion {num}: {'PASS' if ok else 'FAIL'}  {label.replace('_', ' ')}  ({secs:.2f}s)")


@pytest.fixture
def fresh_cache():
    """Swap in an empty character cache for the duration of a test."""
    saved = characters.CACHE
    characters.CACHE = characters.CharacterCache()
    yield characters.CACHE
    characters.CACHE = saved
