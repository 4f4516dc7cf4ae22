import pytest

from rmacode import AuthConfig, build_generator
from rmacode.rm_code import dimension

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def toy():
    """RM(2,1) with M=2, l=1: the four-source toy scheme."""
    return AuthConfig.create(2, 1, 2, 1)


@pytest.fixture
def table2_m4():
    return AuthConfig.create(4, 1, 4, 3)


def valid_configs(max_m=4, orders=(1, 2), max_M=5, max_l=3):
    out = []
    for m in range(1, max_m + 1):
        for r in orders:
            if r > m:
                continue
            for M in range(1, min(max_M, dimension(m, r) - 1) + 1):
                if M >= 2**m:
                    continue
                for l in range(1, min(M, max_l) + 1):
                    out.append((m, r, M, l))
    return out


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
