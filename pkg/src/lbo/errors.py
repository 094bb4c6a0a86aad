"""Exception types shared across the package."""


class NotInLightConeError(ValueError):
    """Raised when an operation requires a light-cone bivector and the input is not one."""


class DegenerateOrbitError(ValueError):
    """Raised when an operation defined only on neutral orbits receives a degenerate one."""


class InvariantViolationError(RuntimeError):
    """A structural identity that must hold by construction failed numerically.

    This signals a bug in the library (or badly conditioned input far outside
    the supported regime), never a routine input error.
    """
