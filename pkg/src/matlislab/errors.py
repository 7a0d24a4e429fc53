"""Exception hierarchy for matlislab."""


class MatlisLabError(Exception):
    """Base class for all engine errors."""


class DimensionMismatch(MatlisLabError):
    pass


class ParentMismatch(MatlisLabError):
    pass


class NotLocal(MatlisLabError):
    pass


class BoundNotCertified(MatlisLabError):
    pass


class InconsistentPresentation(MatlisLabError):
    pass


class NotASubmodule(MatlisLabError):
    pass


class NotUniserial(MatlisLabError):
    pass


class NotEquivariant(MatlisLabError):
    pass


class NotInjectiveAmbient(MatlisLabError):
    pass


class NotFree(MatlisLabError):
    pass


class UnknownModuleRef(MatlisLabError):
    pass


class FixtureParseError(MatlisLabError):
    """Malformed fixture file; carries position info in the message."""


class FixtureValidationError(MatlisLabError):
    """Well-formed fixture violating a structural invariant."""
