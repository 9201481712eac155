import pytest

from lefcoin.corpus import corpus

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def entries():
    return corpus()


@pytest.fixture
def report():
    """Record one pass/fail line for the acceptance summary."""
    def _record(number: int, title: str, ok: bool, detail: str) -> bool:
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {title}: {detail}")
        print(ACCEPTANCE_LINES[-1])
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split(".")[0].split()[-1])):
            terminalreporter.write_line(line)
