import pytest

_LINES: dict[int, str] = {}


@pytest.fixture
def criterion():
    """Record the one-line verdict of an acceptance criterion."""

    def record(number: int, passed: bool, summary: str, seconds: float) -> None:
        status = "PASS" if passed else "FAIL"
        _LINES[number] = f"AC{number:02d} [{status}] {summary} ({seconds:.1f} s)"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_LINES):
        terminalreporter.write_line(_LINES[n])
