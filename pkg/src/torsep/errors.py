"""Exception types shared across the package."""


class TorsepError(Exception):
    """Base class for package-specific errors."""


class DimensionTooLarge(TorsepError):
    """An enumeration-based routine was asked to scan past its dimension cap."""


class SearchSpaceTooLarge(TorsepError):
    """A subset search would exceed the configured enumeration budget."""


class NotInHull(TorsepError, ValueError):
    """A convex-combination certificate was requested for a point outside the hull."""


class GeneratorNotInvariant(TorsepError, ValueError):
    """A semigroup generator does not lie in the invariant semigroup of the representation."""


class NotNullconeComponent(TorsepError, ValueError):
    """An index set passed as a nullcone component is not one."""


class InvariantViolation(TorsepError, RuntimeError):
    """A result contradicts a guaranteed theorem; indicates an implementation bug."""
