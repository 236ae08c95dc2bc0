import pytest

from brute import atlas

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture(scope="session")
def small_graphs():
    """Every graph on 1..6 vertices up to isomorphism."""
    return atlas(6, 1)


@pytest.fixture
def criterion():
    """Record a pass/fail line for one acceptance criterion, then assert it."""

    def record(number: int, title: str, failures: list, detail: str = "") -> None:
        status = "PASS" if not failures else "FAIL"
        line = f"criterion {number:2d} {status}: {title}"
        if detail:
            line += f" ({detail})"
        if failures:
            line += f"; first failure: {failures[0]!r}"
        ACCEPTANCE_LINES[number] = line
        print(line)
        assert not failures, line

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
