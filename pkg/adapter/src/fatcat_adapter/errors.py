"""Adapter exception hierarchy."""


class AdapterError(Exception):
    """Base class for adapter failures."""


class InputError(AdapterError, ValueError):
    """Caller-supplied arguments or files are unusable."""


class ModelError(AdapterError):
    """The topic model failed; carries the underlying diagnostics."""


class PdfParseError(AdapterError):
    """The file is not a PDF this reader can make sense of."""
