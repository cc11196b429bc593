"""Exception types shared across the package."""


class QhaError(Exception):
    """Base class for all library errors."""


class ConfigurationError(QhaError, ValueError):
    """Invalid model parameters, functional parameters, or input domains."""


class ModelMismatchError(QhaError, ValueError):
    """Operands built on different phase-space models."""


class HermiticityError(QhaError, ValueError):
    """An operation requiring a Hermitian input (or a real-valued result of
    Hermitian inputs) found a violation beyond its stated tolerance."""


class WindowZeroSetError(QhaError, ValueError):
    """The window's Fourier-Wigner transform vanishes somewhere it must not.

    Carries the offending lattice points so callers can inspect or report
    them. When this is raised the operator is not uniquely determined by the
    requested phase-space representation.
    """

    def __init__(self, message, zero_points):
        super().__init__(message)
        self.zero_points = list(zero_points)
