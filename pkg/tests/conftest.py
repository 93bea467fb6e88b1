import pytest

_lines: list[str] = []


@pytest.fixture
def report():
    """Record one summary line: ``report(n, ok, detail)``."""

    def add(n, ok, detail=""):
        _lines.append(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip())

    return add


def pytest_terminal_summary(terminalreporter):
    if _lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_lines, key=lambda s: int(s.split(":")[0].split()[1])):
            terminalreporter.write_line(line)
