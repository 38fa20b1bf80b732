import contextlib
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA = []


@pytest.fixture
def criterion():
    """Context manager recording one acceptance criterion: pass/fail and runtime limit."""

    @contextlib.contextmanager
    def run(number, title, limit):
        start = time.perf_counter()
        status = 'FAIL'
        try:
            yield
            elapsed = time.perf_counter() - start
            assert elapsed < limit, f'criterion {number} took {elapsed:.2f}s (limit {limit}s)'
            status = 'PASS'
        finally:
            elapsed = time.perf_counter() - start
            line = f'[{status}] criterion {number:>2}: {title} ({elapsed:.2f}s / {limit}s)'
            _CRITERIA.append(line)
            print(line)

    return run


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section('acceptance criteria')
        for line in _CRITERIA:
            terminalreporter.write_line(line)
