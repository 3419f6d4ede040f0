"""Exception and warning types shared across the package."""


class HorizonFuseError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateInput(HorizonFuseError):
    """Input does not determine a unique solution (e.g. vertical line fit)."""


class RayParallelToGround(HorizonFuseError):
    """Viewing ray is at or above the horizon; no ground intersection."""


class CollinearPoints(HorizonFuseError):
    """Three points do not span a plane."""


class AntiparallelVectors(HorizonFuseError):
    """Vector alignment is singular for opposite directions."""


class NoBoundary(HorizonFuseError):
    """Mask contains no usable sky/ground boundary."""


class InsufficientGround(HorizonFuseError):
    """Too little of the ground region is visible to sample."""


class BelowActivationHeight(HorizonFuseError):
    """Camera is below the minimum height for ground-plane tracking."""


class AllWeightsZero(HorizonFuseError):
    """Every particle weight underflowed; observation incompatible with cloud."""


class EmptyFilter(HorizonFuseError):
    """Filter has no particles to estimate from."""


class ConfigError(HorizonFuseError):
    """Malformed scenario configuration; message names the offending field."""


class ScenarioError(HorizonFuseError):
    """Scenario directory is missing or corrupt."""


class GimbalLockWarning(UserWarning):
    """Euler extraction is near the pitch singularity."""


class ExcessiveRollWarning(UserWarning):
    """Measured roll exceeded the mechanical limit and was clamped."""
