import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from agindex.enumeration import enumerate_connected  # noqa: E402


@pytest.fixture(scope="session")
def connected7():
    """All connected graphs on 2..7 vertices, one per isomorphism class."""
    return [g for n in range(2, 8) for g in enumerate_connected(n)]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
