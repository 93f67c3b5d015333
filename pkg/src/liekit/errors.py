"""Exception types shared by the whole package."""


class LieKitError(Exception):
    """Base class for all liekit errors."""


class StructuralError(LieKitError):
    """Malformed data: kind/dimension mismatches, non-rational input."""


class DomainError(LieKitError):
    """Structurally valid input outside an operation's domain."""
