import logging

import pytest

# filled by test_acceptance.py, one CheckResult per criterion
ACCEPTANCE_RESULTS = []


@pytest.fixture
def quiet_package_logs():
    logger = logging.getLogger("unruh_teleport")
    level = logger.level
    logger.setLevel(logging.ERROR)
    yield
    logger.setLevel(level)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for result in sorted(ACCEPTANCE_RESULTS, key=lambda r: r.number):
        terminalreporter.write_line(result.line())
