"""Error hierarchy shared by all modules.

The CLI maps these onto exit codes: InvalidInputError -> 2,
OutsideRegimeError / NoLoopError / NotSynthesizableError -> 3,
PlanVerificationError -> 4.
"""


class CatacoolError(Exception):
    """Base class for all package-specific errors."""


class InvalidInputError(CatacoolError, ValueError):
    """Malformed or out-of-contract input (dimensions, ranges, NaNs)."""


class OutsideRegimeError(CatacoolError):
    """The requested closed form is only defined inside a parameter regime."""


class NoLoopError(CatacoolError):
    """A uniform loop with strictly positive swap currents does not exist."""


class NotSynthesizableError(CatacoolError):
    """No geometric catalyst can enable the requested transformation."""


class InconsistentCertificateError(CatacoolError):
    """A stored certificate no longer matches the supplied spectra."""


class PlanVerificationError(CatacoolError):
    """Executing a plan broke the catalysis tolerance."""
