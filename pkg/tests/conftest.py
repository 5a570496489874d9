import pytest

CRITERIA = []


@pytest.fixture
def criterion():
    """Record one acceptance line: criterion(number, ok, detail)."""

    def record(number, ok, detail=""):
        CRITERIA.append((number, ok, detail))
        return ok

    return record


@pytest.fixture(autouse=True)
def _cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("SUMSETS_CACHE_DIR", str(tmp_path / "cache"))
    monkeypatch.delenv("SUMSETS_CONFIG", raising=False)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(CRITERIA, key=lambda c: (isinstance(c[0], str), c[0])):
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
