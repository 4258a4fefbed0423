"""Shared exception type for the toolkit."""


class DomainError(ValueError):
    """An operation was invoked outside its mathematical domain."""
