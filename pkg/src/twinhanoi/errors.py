"""Exception types shared across the package.

The CLI maps these onto exit codes, so solver and graph code should raise
them rather than bare ValueErrors whenever the condition is one a caller
can anticipate.
"""


class TwinHanoiError(Exception):
    """Base class for all package-specific errors."""


class CapacityExceeded(TwinHanoiError):
    """A search or render would exceed the configured memory/size budget."""


class Incompatible(TwinHanoiError):
    """The two coupled configurations lie in different components."""


class NotBasic(TwinHanoiError):
    """A coupled configuration has a nonzero common prefix where a basic one is required."""


class SizeMismatch(TwinHanoiError):
    """Configurations of different disk counts were mixed."""


class NotInA(TwinHanoiError):
    """A move word expected to have all letter-count parities equal does not."""


class NotSquareFree(TwinHanoiError):
    """A move word contains an immediately repeated letter."""


class NotAPath(TwinHanoiError):
    """A move word does not transform the stated source into the stated target."""


class UnclassifiedSyllable(TwinHanoiError):
    """A syllable does not match any of the eighteen closed-walk shapes."""


class CacheError(TwinHanoiError):
    """A distance-cache file is malformed or does not match the request."""
