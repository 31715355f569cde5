import pytest

from sievelab.sieve import build_flags, twin_flags

# filled by test_acceptance, echoed after the run
ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def flags_1e6():
    return build_flags(10**6 // 6 + 20)


@pytest.fixture(scope="session")
def twin_1e6(flags_1e6):
    return twin_flags(flags_1e6)


@pytest.fixture(scope="session")
def flags_small():
    return build_flags(10**4)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
