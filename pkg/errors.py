"""
SpringerKit Errors
==================
Exception hierarchy shared by every module.

All errors derive from SpringerKitError so the CLI can map them to exit code 2.
Construction-time validation errors also derive from ValueError.
"""


class SpringerKitError(Exception):
    """Base class for all springerkit errors."""


class ConcatenationOrderError(SpringerKitError, ValueError):
    """Column lengths of the left operand are too short for the right operand."""


class ParityError(SpringerKitError, ValueError):
    """A size that must be even is odd (or the converse)."""


class RangeError(SpringerKitError, ValueError):
    """Integer parameter outside its allowed range."""


class AdmissibilityError(SpringerKitError, ValueError):
    """Partition is not admissible for the requested form kind."""


class NilpotencyError(SpringerKitError, ValueError):
    """Matrix is not square nilpotent."""


class ModelError(SpringerKitError, ValueError):
    """A nilpotent model is missing data or violates its invariants."""


class SubspaceError(SpringerKitError, ValueError):
    """Subspace is not x-stable or not inside the required ambient space."""


class ScaleError(SpringerKitError):
    """Problem size exceeds the configured guard."""


class NotDominoError(SpringerKitError):
    """Consecutive shapes in a chain do not differ by a domino."""


class DomainError(SpringerKitError, ValueError):
    """Point does not lie on the variety."""


class LabelError(SpringerKitError, KeyError):
    """Unknown orbit label for the requested group."""

    def __str__(self):
        return str(self.args[0]) if self.args else ''


class InvariantViolation(SpringerKitError):
    """An internal invariant failed; this indicates a bug, not bad input."""
