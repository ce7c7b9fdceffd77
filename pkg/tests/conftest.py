from __future__ import annotations

from contextlib import contextmanager

import pytest

_RESULTS: dict = {}


@contextmanager
def _record(number: int, title: str):
    try:
        yield
    except BaseException as exc:
        _RESULTS[number] = (title, "FAIL", str(exc).splitlines()[0] if str(exc) else type(exc).__name__)
        raise
    _RESULTS[number] = (title, "PASS", "")


@pytest.fixture
def criterion():
    """Context manager recording one acceptance criterion's outcome."""
    return _record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, status, why = _RESULTS[number]
        line = f"criterion {number}: {status}  {title}"
        terminalreporter.write_line(line + (f"  ({why})" if why else ""))
