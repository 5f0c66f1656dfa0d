"""Exception types shared across the engine."""


class ModclassError(Exception):
    """Base class for all engine errors."""


class RingSpecError(ModclassError):
    """Malformed ring-spec expression or structure-constant file."""


class RingValidationError(ModclassError):
    """Structure constants violate the ring axioms.

    Carries the axiom report that triggered the failure in ``report``.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class SizeCapError(ModclassError):
    """A carrier, enumeration, or search exceeded its configured cap."""


class SideError(ModclassError):
    """An ideal of the wrong sidedness was passed (e.g. quotient by a one-sided ideal)."""


class ClosureError(ModclassError):
    """A claimed submodule is not closed under addition or the ring action."""


class ConsistencyError(ModclassError):
    """Two independent computations of the same fact disagree; signals an engine bug."""
