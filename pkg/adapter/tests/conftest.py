"""Fixtures and the adapter acceptance summary hook."""

from importlib.resources import files
from pathlib import Path

import pytest

from adapter_helpers import _acceptance_lines


@pytest.fixture(scope="session")
def toycorpus() -> Path:
    return Path(str(files("fatcat_adapter").joinpath("toycorpus")))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_lines:
        return
    terminalreporter.section("adapter acceptance")
    for line in _acceptance_lines:
        terminalreporter.write_line(line)
