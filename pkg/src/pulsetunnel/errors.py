"""Exception taxonomy shared across the package.

Exit-code mapping used by the CLI: configuration problems -> 2,
numerical/convergence failures -> 3, approximation-domain violations -> 4.
"""


class PulseTunnelError(Exception):
    """Base class for all package errors."""


class ConfigurationError(PulseTunnelError):
    """Invalid user input: bad units, grids, detector placement, packet support."""


class DimensionError(ConfigurationError):
    """Combining quantities of incompatible dimensions."""


class PresetLookupError(ConfigurationError):
    """Unknown preset name; message lists the available presets."""


class NoTunnelingError(ConfigurationError):
    """Energy outside the tunneling window of the barrier (above top / below floor)."""


class UnsupportedOperationError(ConfigurationError):
    """Operation not defined for this pulse or potential variant."""


class NumericalError(PulseTunnelError):
    """Quadrature or propagation failed to converge; carries diagnostics."""


class WindowError(NumericalError):
    """Oscillatory-quadrature integrand does not decay at the window edges."""


class StepSizeError(NumericalError):
    """Time step fails the step-halving accuracy monitor."""


class SelfCheckError(NumericalError):
    """Two independent evaluations of the same quantity disagree."""


class ModelError(PulseTunnelError):
    """Physical model is inconsistent (e.g. no bound state in the well)."""


class ApproximationError(PulseTunnelError):
    """Approximation-domain violation (opaque/shallow-slope regime broken)."""


class SingularityError(ApproximationError):
    """Complex-time continuation too close to a pole of the quiver."""


class ApproximationDomainError(ApproximationError):
    """Inputs outside the validity domain of a semi-analytic formula."""


class ApproximationDomainWarning(UserWarning):
    """Result returned, but a regime flag of the approximation is violated."""
