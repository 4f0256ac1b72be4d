"""Exception types shared across the package.

Everything derives from :class:`SheTorqueError` so callers can catch the
whole family, while the concrete classes keep failure modes distinguishable
(a ratio premise failing is recoverable, a diverged simulation is not).
"""


class SheTorqueError(ValueError):
    """Base class for domain errors raised by this package."""


class InvalidFrequencyError(SheTorqueError):
    """Synchronous (electrical) frequency is zero or negative."""


class InvalidOrderError(SheTorqueError):
    """Harmonic order/index outside the supported family."""


class UnsupportedOrderError(InvalidOrderError):
    """Order absent from the quarter-wave pattern spectrum (even or triplen)."""


class SingularSlipError(SheTorqueError):
    """Slip too close to zero (or negative) for a circuit quantity."""


class UndefinedRatioError(SheTorqueError):
    """An amplitude/voltage ratio with a vanishing denominator."""


class NoMinimizingRatioError(SheTorqueError):
    """cos(phase difference) < 0: no voltage ratio can cancel the pair."""


class InfeasibleError(SheTorqueError):
    """No switching angles satisfy the requested targets.

    Carries the evidence: the requested modulation index and the supremum
    reachable under the same harmonic-ratio constraint.
    """

    def __init__(self, message, mi_target=None, mi_max=None):
        super().__init__(message)
        self.mi_target = mi_target
        self.mi_max = mi_max


class NoSolutionError(SheTorqueError):
    """A constraint manifold is empty over the feasible angle region."""


class SpectralLeakageError(SheTorqueError):
    """Analysis window does not span an integer number of periods."""


class TransientError(SheTorqueError):
    """Time series not settled: cycle-to-cycle amplitude still drifting."""


class InstabilityError(SheTorqueError):
    """Simulated speed diverged beyond the plausible operating range."""


class UnstableRegionError(SheTorqueError):
    """Requested load exceeds the machine's stable (sub-breakdown) torque."""


class ConfigError(SheTorqueError):
    """Experiment configuration is malformed or inconsistent."""


class EmptyResultError(SheTorqueError):
    """A sweep produced no solvable operating point.

    Carries the flagged rows on ``rows`` so callers can still write the
    (all-failed) result table before reporting the error.
    """

    def __init__(self, message, rows=()):
        super().__init__(message)
        self.rows = tuple(rows)
