"""Exception types shared across the package."""


class DichotError(Exception):
    """Base class for all errors raised by this package."""


class ResourceLimitError(DichotError):
    """An input exceeds a configured feasibility tier or hard cap."""


class IntegrityError(DichotError):
    """An exact-arithmetic identity failed; indicates an internal bug."""
