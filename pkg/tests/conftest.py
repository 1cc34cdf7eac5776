import pytest

from regcorr import QuadParams, certify_double_layer, certify_single_layer

RHOS = (2.0, 2.5, 3.0)
AS = (1.0, 2.0)


@pytest.fixture(scope="session")
def table1():
    return {(a, rho): certify_single_layer(QuadParams.from_degrees(rho, 70.0, a))
            for a in AS for rho in RHOS}


@pytest.fixture(scope="session")
def table2():
    return {(a, rho): certify_double_layer(QuadParams.from_degrees(rho, 70.0, a))
            for a in AS for rho in RHOS}


ACCEPTANCE_LINES = []


def record(number, ok, detail):
    ACCEPTANCE_LINES.append(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
