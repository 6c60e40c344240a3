"""Exception types shared across the package."""

from __future__ import annotations


class IgnifrontError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(IgnifrontError, ValueError):
    """A model or configuration parameter is outside its admissible range."""


class AdmissibilityError(IgnifrontError, ValueError):
    """A spectral query sits below the real-root admissibility floor."""


class DegenerateRootError(IgnifrontError, ArithmeticError):
    """Two spatial exponents coincide; the queried expression has a pole."""


class NotOnManifoldError(IgnifrontError, ValueError):
    """An eigenmode was requested at a point that does not satisfy the
    dispersion identity."""


class LinearSolveError(IgnifrontError, RuntimeError):
    """An implicit diffusion solve failed to meet its residual contract."""


class FrontTrackingError(IgnifrontError, RuntimeError):
    """The tracked field never crosses the ignition threshold."""


class AmplitudeUnderflowError(IgnifrontError, RuntimeError):
    """A transversal-mode amplitude decayed below measurable levels."""


class ConfigError(IgnifrontError, ValueError):
    """A simulation config file could not be parsed."""
