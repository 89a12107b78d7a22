"""Exception types shared across the package."""


class KreinExtError(Exception):
    """Base class for all package-specific errors."""


class DomainError(KreinExtError, ValueError):
    """An argument lies outside the mathematical domain of an operation.

    Raised, for example, when a spectral parameter is requested off the
    open upper half-plane, or when a subspace operation receives data
    that violates a stated precondition.
    """


class AccuracyError(KreinExtError, RuntimeError):
    """A numerical routine could not reach its accuracy target.

    Typically signals that a truncated half-line problem did not
    converge within the allowed truncation radius.
    """


class IndeterminateError(KreinExtError, RuntimeError):
    """Sampled data was insufficient to decide a verdict."""


class NumericalFailure(KreinExtError, RuntimeError):
    """An internal consistency check failed during computation.

    Covers non-integral winding numbers, root polishing that does not
    converge, and structural/sampled verdicts that disagree.
    """


class PoleError(KreinExtError, ZeroDivisionError):
    """Evaluation was requested at (or numerically too close to) a pole."""
