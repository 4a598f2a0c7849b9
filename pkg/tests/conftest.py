import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA = []


@pytest.fixture
def criterion():
    def record(number, name, passed, detail=""):
        _CRITERIA.append((number, name, bool(passed), detail))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, passed, detail in sorted(_CRITERIA, key=lambda r: r[0]):
        status = "PASS" if passed else "FAIL"
        line = f"[{status}] {number}. {name}"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)
