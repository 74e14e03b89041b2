from pathlib import Path

import pytest
from hypothesis import strategies as st

from phasepants.partitions import enumerate_cyclic_partitions

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def partitions_up_to(max_n=4):
    """Strategy drawing a cyclic partition of {0..n} for some 1 <= n <= max_n."""
    return st.integers(1, max_n).flatmap(lambda n: st.sampled_from(enumerate_cyclic_partitions(n)))


_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    """Collects one PASS/FAIL line per acceptance criterion; printed at the end of the run."""
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
