"""Shared exception types.

Validation failures (bad degrees, malformed types, out-of-range exponents)
raise :class:`InvalidTypeError`; computations refused because a configured
resource bound would be exceeded raise :class:`BoundExceededError`.  The CLI
maps these to exit codes 2 and 3 respectively.
"""


class InvalidTypeError(ValueError):
    """Input fails a domain precondition."""


class BoundExceededError(RuntimeError):
    """A configured degree/order/size guard was exceeded."""
