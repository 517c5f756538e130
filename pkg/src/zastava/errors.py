"""Shared error types, mapped to CLI exit codes (usage -> 2, resource -> 3)."""


class UsageError(Exception):
    """Caller asked for something the library refuses by contract."""


class ResourceLimitError(Exception):
    """A configured size/height ceiling was exceeded."""
