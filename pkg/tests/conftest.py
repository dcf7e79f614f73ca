import pytest

from dsjets.invariants import jet_ring


@pytest.fixture(scope="session")
def ring3():
    return jet_ring(3)


@pytest.fixture(scope="session")
def ring2():
    return jet_ring(2)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import summary_lines
    except ImportError:
        return
    lines = summary_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
