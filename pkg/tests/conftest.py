import pytest

from spin9.canonical import canonical_8form
from spin9.operators import build_involutions

CRITERION_LINES = []


def record_criterion(line: str) -> None:
    CRITERION_LINES.append(line)


@pytest.fixture(scope="session")
def family():
    return build_involutions()


@pytest.fixture(scope="session")
def omega8():
    return canonical_8form()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in CRITERION_LINES:
            terminalreporter.write_line(line)
