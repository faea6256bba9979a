import pytest

# (criterion id, passed, detail) recorded by tests/test_acceptance.py
ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion():
    def record(cid: str, passed: bool, detail: str) -> None:
        ACCEPTANCE.append((cid, bool(passed), detail))
        assert passed, f"criterion {cid} failed: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for cid, passed, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {cid:<4} {detail}")
