class SpanError(Exception):
    """Base class for all errors raised by spanbicat."""


class BoundaryError(SpanError, ValueError):
    """Domains/codomains or span boundaries do not line up."""


class NotAMapError(SpanError, ValueError):
    """A span was required to be a map (left leg invertible) and is not."""


class PreconditionError(SpanError, ValueError):
    """An operation's documented precondition does not hold."""
