"""Exception hierarchy shared across the toolkit.

The split mirrors how failures are reported to callers (and mapped to CLI
exit codes): configuration mistakes, bad input data, and missing or broken
external resources are distinct failure classes.
"""


class FairmineError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(FairmineError):
    """Invalid configuration or incompatible options."""


class DataError(FairmineError):
    """Malformed or inconsistent input data (datasets, vector files)."""


class ResourceError(FairmineError):
    """A required external resource is missing or unreadable."""
