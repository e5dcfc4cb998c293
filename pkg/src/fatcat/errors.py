"""Exception types shared across the package.

Two failure families are distinguished so callers (and the CLI exit
codes) can tell bad input apart from operations that are undefined or
refused on otherwise well-formed data.
"""


class FatcatError(Exception):
    """Base class for all errors raised by this package."""


class InputError(FatcatError, ValueError):
    """Malformed or inconsistent input: bad ids, bad files, bad parameters."""


class DomainError(FatcatError):
    """Operation undefined or refused for this input (empty context, size guard, sentinel threshold)."""
