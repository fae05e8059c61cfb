import pytest
from hypothesis import HealthCheck, settings

from ranklist.ffield import FieldContext

settings.register_profile(
    "default",
    derandomize=True,
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def F4():
    return FieldContext(2, 2)


@pytest.fixture(scope="session")
def F8():
    return FieldContext(2, 3)


@pytest.fixture(scope="session")
def F16():
    return FieldContext(2, 4)


@pytest.fixture(scope="session")
def F9():
    return FieldContext(3, 2)


def pytest_configure(config):
    config.acceptance_lines = []


def pytest_terminal_summary(terminalreporter, config):
    if config.acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in config.acceptance_lines:
            terminalreporter.write_line(line)
