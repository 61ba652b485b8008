"""Exception types raised across the package."""


class HypergenError(Exception):
    """Base class for all package errors."""


class RealisabilityError(HypergenError, ValueError):
    """The degree/dimension pair admits no hypergraph realisation."""


class InternalInvariantError(HypergenError, RuntimeError):
    """A condition guaranteed by construction did not hold.

    Seeing this means a bug, not bad input.
    """


class CapExceeded(HypergenError, ValueError):
    """Brute-force enumeration was asked for an instance beyond its work cap."""


class ParseError(HypergenError, ValueError):
    """Malformed input text."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class EmptyInput(ParseError):
    """Input contained no edges."""
