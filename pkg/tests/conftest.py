import pytest

from oseq import count_table

_verdicts: list[str] = []


def record_verdict(line: str) -> None:
    """Collect an acceptance verdict for the end-of-run summary."""
    _verdicts.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _verdicts:
        terminalreporter.section("acceptance criteria")
        for line in _verdicts:
            terminalreporter.line(line)


@pytest.fixture(scope="session")
def table60():
    """The full count table to d = 60, shared across the session."""
    return count_table(60)


@pytest.fixture(scope="session")
def table20(table60):
    from oseq.enumerator import CountTable

    return CountTable(max_d=20, O=table60.O[:21], A=table60.A[:21])
