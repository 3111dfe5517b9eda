"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input lies outside the mathematical domain of an operation."""


class CausticError(DomainError):
    """Oscillator kernel requested inside the caustic guard band."""


class CoverageError(DomainError):
    """Quadrature grid does not cover the support of the integrand."""


class ConvergenceError(RuntimeError):
    """Iterative procedure exhausted its iteration budget."""


class UnsupportedKernelError(ValueError):
    """Kernel lacks the structure required by the requested operation."""


class ConfigError(ValueError):
    """Missing, unknown, or malformed run-configuration entry."""
