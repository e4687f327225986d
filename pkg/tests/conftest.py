import pytest

from rootdeform.deform import build_theta, factorize
from rootdeform.reduced import reduced_root_space
from rootdeform.weyl import build_root_system

from reference_values import EXAMPLE_MINUS, EXAMPLE_PLUS


@pytest.fixture(scope="session")
def e8():
    return build_root_system("E8")


@pytest.fixture(scope="session")
def example(e8):
    return factorize(e8, EXAMPLE_MINUS, EXAMPLE_PLUS)


@pytest.fixture(scope="session")
def theta(example):
    return build_theta(example)


@pytest.fixture(scope="session")
def space(example):
    return reduced_root_space(example)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
