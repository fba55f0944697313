"""Exception hierarchy shared by the numerical modules."""


class AnnuliError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgumentError(AnnuliError, ValueError):
    pass


class DomainError(AnnuliError, ValueError):
    """Argument lies on or beyond a singularity of the formula."""


class IntegrationFailure(AnnuliError, RuntimeError):
    """The ODE integrator gave up; ``last_t`` is the last accepted time."""

    def __init__(self, message, last_t):
        super().__init__(f"{message} (last good t={last_t!r})")
        self.last_t = last_t


class NoOscillationError(AnnuliError, RuntimeError):
    pass


class NoSolutionError(AnnuliError, RuntimeError):
    pass


class DegenerateSurfaceError(AnnuliError, ValueError):
    pass


class InvalidPerturbationError(AnnuliError, ValueError):
    pass


class UnsupportedCombinationError(AnnuliError, ValueError):
    pass


class ArtifactIOError(AnnuliError, OSError):
    """Writing an output file failed; the message names the path."""
