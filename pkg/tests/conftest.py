import logging

import pytest


@pytest.fixture(autouse=True)
def _quiet_generator_warnings():
    logging.getLogger("asg").setLevel(logging.ERROR)
    yield


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import CRITERIA, RESULTS
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        line = RESULTS.get(number, f"SKIP  criterion {number:2d}: {CRITERIA[number][0]}")
        terminalreporter.write_line(line)
