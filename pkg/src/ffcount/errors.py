"""Exception types shared across the package."""


class RefusalError(Exception):
    """Raised when a requested computation is refused rather than approximated.

    Used for enumeration budgets, coverage limits (e.g. heights that would
    require genus >= 2 class data), and unsupported parameter ranges.  The
    message always states the reason; callers must not silently truncate.
    """


class ConsistencyError(Exception):
    """An internal exact identity failed; indicates a counting bug upstream."""


class DescriptorError(ValueError):
    """Invalid curve descriptor data (bad invariants or file syntax)."""
