"""Exception types shared across the package."""


class AmnsError(Exception):
    """Base class for all AMNS-specific failures."""


class GammaUnavailableError(AmnsError):
    """No nth root of lambda modulo p is available for this (p, n, lambda)."""


class InfeasibleBoundsError(AmnsError):
    """No candidate M admits feasible (rho, phi) bounds for the given word size.

    The message names the first inequality that failed.
    """


class InternalInvariantError(AmnsError):
    """A condition the construction guarantees was violated; indicates a bug
    or corrupted parameters, never a user error."""


class DepthBudgetError(AmnsError):
    """The addition-depth budget (delta) of the system was exceeded."""


class AccumulatorOverflowError(AmnsError):
    """An intermediate value exceeded the declared 2k-bit signed accumulator."""


class SearchBoundError(AmnsError):
    """A parameter exceeds a hard search bound (e.g. the 2^n combination scan)."""


class ParamFileError(AmnsError):
    """Malformed parameter file."""
