import pytest

_ACCEPTANCE: list[tuple[int, str, bool, str]] = []


class AcceptanceRecorder:
    def __call__(self, number: int, title: str, ok: bool, detail: str) -> None:
        _ACCEPTANCE.append((number, title, bool(ok), detail))


@pytest.fixture(scope="session")
def acceptance():
    return AcceptanceRecorder()


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}: {detail}")
