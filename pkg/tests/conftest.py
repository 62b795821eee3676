import re

import pytest

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")
_outcomes: dict[int, tuple[str, bool]] = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m or "test_acceptance" not in report.nodeid:
        return
    num = int(m.group(1))
    failed = report.failed
    if report.when == "call" or failed:
        prev = _outcomes.get(num, (m.group(2), True))
        _outcomes[num] = (m.group(2), prev[1] and not failed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_outcomes):
        name, ok = _outcomes[num]
        terminalreporter.write_line(f"criterion {num} {name.replace('_', ' ')}: "
                                    f"{'PASS' if ok else 'FAIL'}")


@pytest.fixture(scope="session")
def rng():
    import random
    return random.Random(20240611)
