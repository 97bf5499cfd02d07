"""Exception types shared across the package."""


class GFRootsError(Exception):
    """Base class for every error this package raises on purpose."""


class BadSpec(GFRootsError):
    """Malformed parameters: field degree, polynomial mask, CLI input."""


class NotPrimitive(GFRootsError):
    """The candidate polynomial does not generate the whole multiplicative group."""


class DegenerateInput(GFRootsError):
    """Polynomial with no meaningful root set (zero, or a nonzero constant)."""


class ZeroToZero(GFRootsError):
    """0**0 was requested."""


class DivisionByZero(GFRootsError, ZeroDivisionError):
    """Multiplicative inverse of zero was requested."""
