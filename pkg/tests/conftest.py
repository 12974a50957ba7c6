import pytest

from onecob.cobordism import Cobordism, In, Out

# Filled by tests/test_acceptance.py; printed at the end of every run.
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[key])


# The example cobordism +--+ -> +- used throughout.
EXAMPLE = Cobordism("+--+", "+-", [(In(0), In(1)), (In(2), Out(1)), (In(3), Out(0))])

EXAMPLE_ROWS = [
    "1000000000001000",
    "0010000000000010",
    "0100000000000100",
    "0001000000000001",
]


@pytest.fixture
def example():
    return EXAMPLE


@pytest.fixture
def example_rows():
    return EXAMPLE_ROWS


@pytest.fixture(scope="session")
def acceptance():
    return ACCEPTANCE
