"""Shared fixtures; collects one summary line per acceptance criterion."""

import pytest

from mzeta import hurwitz, quadrature

_CRITERIA: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def record():
    """Store ``(passed, message)`` for a numbered acceptance criterion."""

    def _record(number: int, passed: bool, message: str):
        _CRITERIA[number] = (bool(passed), message)
        print(f"{'PASS' if passed else 'FAIL'} criterion {number}: {message}")

    return _record


@pytest.fixture
def cold_caches():
    """Drop memoised tables so timings include their construction."""
    hurwitz._plan.cache_clear()
    hurwitz.em_coefficients.cache_clear()
    quadrature._tail_coefficients.cache_clear()
    quadrature._gauss.cache_clear()
    yield


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        passed, message = _CRITERIA[number]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'} criterion {number}: {message}")
