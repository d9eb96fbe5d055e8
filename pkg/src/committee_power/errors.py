"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Bad input: malformed rankings, committee specs, or option values."""


class EnumerationCapError(RuntimeError):
    """Exhaustive enumeration would exceed the configured size cap."""
