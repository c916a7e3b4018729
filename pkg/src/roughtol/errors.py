"""Exception types raised by the library."""


class RoughtolError(Exception):
    """Base class for all library errors."""


class UnknownElementError(RoughtolError):
    """A label does not belong to the universe in question."""


class NotAToleranceError(RoughtolError):
    """An operation requiring a reflexive symmetric relation got something else."""


class CapExceededError(RoughtolError):
    """An exhaustive subset sweep was requested above the configured cap."""


class NotInFamilyError(RoughtolError):
    """A set is not a member of the approximation family it was claimed to be in."""


class NotACoveringError(RoughtolError):
    """A family of sets does not cover the universe or has empty members."""


class CoveringMismatchError(RoughtolError):
    """A covering does not induce the relation it was paired with."""


class PreconditionError(RoughtolError):
    """A documented precondition of a constructive operation failed; the
    message names the failing clause."""


class ConstructionFailedError(RoughtolError):
    """A constructive operation could not validate its own postcondition.
    Raised instead of returning a wrong result."""


class NotInCarrierError(RoughtolError):
    """A pair is not a member of the carrier an operation is defined on."""


class ModeError(RoughtolError):
    """An information-system operation was applied to a table of the wrong mode."""


class AssumptionViolatedError(RoughtolError):
    """A stated assumption about the input data does not hold."""
