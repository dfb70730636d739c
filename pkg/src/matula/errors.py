"""Exception types shared across the package."""


class MatulaError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(MatulaError):
    """An argument is outside the documented domain (e.g. n = 0)."""


class CapacityExceeded(MatulaError):
    """A request needs primes beyond the configured sieve ceiling."""


class NotPrime(MatulaError):
    """A prime was required but the argument is composite or < 2."""


class ParseError(MatulaError):
    """Malformed textual input.  ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class InternalIntegrityError(MatulaError):
    """An internal exactness check failed; indicates a bug, not bad input."""


class BudgetExceeded(MatulaError):
    """A brute-force computation was asked to exceed its size budget."""


class UnsupportedName(MatulaError):
    """The requested statistic name is not known to this computation."""
