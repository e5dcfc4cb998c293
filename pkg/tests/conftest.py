"""Fixtures and the acceptance summary hook."""

import pytest

from fatcat.context import FormalContext

from helpers import _acceptance_lines


# -- fixtures -----------------------------------------------------------------


@pytest.fixture
def k2() -> FormalContext:
    """Two objects, two attributes: g1 has both, g2 has only m1."""
    return FormalContext(["g1", "g2"], ["m1", "m2"], [[1, 1], [1, 0]])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in _acceptance_lines:
        terminalreporter.write_line(line)
