import sys
from pathlib import Path

import pytest

from exact_r2 import _backend

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(params=_backend.available())
def backend(request):
    """Run the test once per importable kernel backend."""
    with _backend.use(request.param) as module:
        yield module


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
