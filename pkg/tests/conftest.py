import math

import pytest

from arcbest import make_arc

TABLE_ANGLES = {
    "pi/2": math.pi / 2,
    "pi/3": math.pi / 3,
    "pi/4": math.pi / 4,
    "pi/6": math.pi / 6,
    "pi/8": math.pi / 8,
    "pi/12": math.pi / 12,
}

ACCEPTANCE_LINES = []


@pytest.fixture(params=list(TABLE_ANGLES), ids=list(TABLE_ANGLES))
def table_arc(request):
    return make_arc(TABLE_ANGLES[request.param])


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
