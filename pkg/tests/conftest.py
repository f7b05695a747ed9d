import time
from contextlib import contextmanager

import pytest

_RESULTS: list[tuple[int, str, str, float]] = []


@pytest.fixture
def criterion():
    """Context manager that records one PASS/FAIL line per acceptance criterion."""

    @contextmanager
    def record(number: int, title: str):
        start = time.perf_counter()
        status = "FAIL"
        try:
            yield
            status = "PASS"
        finally:
            _RESULTS.append((number, title, status, time.perf_counter() - start))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status, elapsed in sorted(_RESULTS):
        terminalreporter.write_line(f"criterion {number}: {status}  {title}  ({elapsed:.2f}s)")
