"""Phasor arithmetic for the 6k-th torque harmonics.

Each (6k-1, 6k+1) voltage-harmonic pair drives a pulsating torque at order
6k.  The two contributions are near-antiphase, so their sum depends on the
amplitude ratio and on a small residual phase difference; the functions
here build the component phasors from circuit solutions, estimate that
phase difference, and turn it into a target voltage ratio for the angle
solver.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .errors import (
    InvalidFrequencyError,
    InvalidOrderError,
    NoMinimizingRatioError,
    SingularSlipError,
    UndefinedRatioError,
)
from .motor import SLIP_EPS, HarmonicSolution


class MethodVariant(enum.Enum):
    """Pattern-selection strategies for the two switching angles."""

    SHE_PWM = "SHE_PWM"
    CLASSIC = "CLASSIC"
    RATIO_I = "RATIO_I"
    RATIO_II = "RATIO_II"


@dataclass(frozen=True)
class TorquePhasor:
    """One pulsating-torque component A*cos(order*w_s*t + phase).

    Attributes:
        order: Torque harmonic order (a multiple of 6).
        amplitude: Non-negative amplitude (N*m).
        phase: Phase in (-pi, pi].
    """

    order: int
    amplitude: float
    phase: float

    def __post_init__(self):
        if self.order % 6 != 0 or self.order <= 0:
            raise InvalidOrderError(
                f"torque harmonics occur at multiples of 6, got {self.order!r}"
            )
        if self.amplitude < 0.0:
            raise ValueError(f"amplitude must be >= 0, got {self.amplitude!r}")
        if not -math.pi < self.phase <= math.pi:
            raise ValueError(f"phase must lie in (-pi, pi], got {self.phase!r}")


def _wrap_phase(angle: float) -> float:
    """Wrap an angle to (-pi, pi]."""
    wrapped = math.remainder(angle, math.tau)
    if wrapped <= -math.pi:
        wrapped += math.tau
    return wrapped


def phasor_sum(b1: float, b2: float, delta_theta: float) -> tuple[float, float]:
    """Sum of B1 at angle ``delta_theta`` with B2 at angle pi.

    This is the canonical near-antiphase pair: the resultant amplitude is

        B3^2 = (B1*cos(dt) - B2)^2 + (B1*sin(dt))^2

    Args:
        b1: First amplitude, >= 0.
        b2: Second amplitude, >= 0.
        delta_theta: Phase of the first phasor relative to the *negated*
            second one (rad).

    Returns:
        ``(amplitude, phase)`` of the resultant, phase in (-pi, pi].
    """
    if b1 < 0.0 or b2 < 0.0:
        raise ValueError(f"amplitudes must be >= 0, got {b1!r}, {b2!r}")
    re = b1 * math.cos(delta_theta) - b2
    im = b1 * math.sin(delta_theta)
    return math.hypot(re, im), math.atan2(im, re)


def min_ratio(b1: float, b2: float) -> float:
    """Amplitude ratio min/max that minimises :func:`phasor_sum`.

    For a fixed phase difference the resultant is smallest when the smaller
    amplitude equals cos(delta_theta) times the larger, i.e. when
    ``cos(delta_theta) == min(b1, b2) / max(b1, b2)``.
    """
    if b1 < 0.0 or b2 < 0.0:
        raise ValueError(f"amplitudes must be >= 0, got {b1!r}, {b2!r}")
    largest = max(b1, b2)
    if largest == 0.0:
        raise UndefinedRatioError("min_ratio undefined for two zero amplitudes")
    return min(b1, b2) / largest


def delta_theta_estimate(
    phi_1: float, phi_minus: float, phi_plus: float
) -> float:
    """Estimated phase difference between the 6k-1 and 6k+1 torque phasors.

    The closed-form estimate ``2*phi_1 + phi_minus - phi_plus`` built from
    rotor-current lags; the result is wrapped to (-pi, pi].
    """
    return _wrap_phase(2.0 * phi_1 + phi_minus - phi_plus)


def torque_amplitude_ratio(
    v_minus: float, v_plus: float, s_minus: float, s_plus: float
) -> float:
    """Estimate A_minus/A_plus from voltage amplitudes and harmonic slips.

    The component amplitudes scale directly with the voltage harmonics and
    inversely with their slips:

        A_minus / A_plus = (v_minus * s_plus) / (v_plus * s_minus)

    Args:
        v_minus: Voltage amplitude of the 6k-1 harmonic, >= 0.
        v_plus: Voltage amplitude of the 6k+1 harmonic, > 0.
        s_minus: Slip of the 6k-1 field, > 0.
        s_plus: Slip of the 6k+1 field, > 0.
    """
    if v_minus < 0.0:
        raise ValueError(f"v_minus must be >= 0, got {v_minus!r}")
    if v_plus == 0.0 or s_minus == 0.0:
        raise UndefinedRatioError(
            f"ratio undefined for v_plus={v_plus!r}, s_minus={s_minus!r}"
        )
    if v_plus < 0.0 or s_minus < 0.0 or s_plus <= 0.0:
        raise ValueError("voltage amplitudes and slips must be positive")
    return (v_minus * s_plus) / (v_plus * s_minus)


def target_voltage_ratio(
    method: MethodVariant, s_minus: float, s_plus: float, delta_theta: float
) -> float:
    """Voltage-harmonic ratio that minimises the 6k-th torque component.

    For :attr:`MethodVariant.RATIO_I` the returned value is the target
    ``V_minus/V_plus = (s_minus/s_plus)*cos(delta_theta)``; for
    :attr:`MethodVariant.RATIO_II` it is ``V_plus/V_minus =
    (s_plus/s_minus)*cos(delta_theta)``.

    Args:
        method: RATIO_I or RATIO_II.
        s_minus: Slip of the 6k-1 field, > 0.
        s_plus: Slip of the 6k+1 field, > 0.
        delta_theta: Phase difference estimate (rad).

    Returns:
        The non-negative target ratio.

    Raises:
        NoMinimizingRatioError: If cos(delta_theta) < 0, where no ratio of
            positive amplitudes can cancel the pair.
    """
    if s_minus <= 0.0 or s_plus <= 0.0:
        raise SingularSlipError(
            f"harmonic slips must be positive, got {s_minus!r}, {s_plus!r}"
        )
    cos_dt = math.cos(delta_theta)
    if cos_dt < 0.0:
        raise NoMinimizingRatioError(
            f"cos(delta_theta)={cos_dt:.4f} < 0: the component phasors cannot "
            "be cancelled by any positive voltage ratio"
        )
    if method is MethodVariant.RATIO_I:
        return (s_minus / s_plus) * cos_dt
    if method is MethodVariant.RATIO_II:
        return (s_plus / s_minus) * cos_dt
    raise ValueError(f"{method!r} does not define a load-dependent ratio")


def torque_component_phasors(
    fund: HarmonicSolution, harm: HarmonicSolution
) -> TorquePhasor:
    """Pulsating-torque phasor produced by one voltage harmonic.

    The fundamental magnetizing flux beats against the harmonic rotor
    current, and the harmonic flux against the fundamental rotor current.
    In zero-angle solve phasors the complex amplitude of the 6k-th torque
    component is

        order 6k-1 (backward):  C = flux_1 * i_n - flux_n * i_1
        order 6k+1 (forward):   C = flux_n * conj(i_1) - conj(flux_1) * i_n

    and the component torque is 1.5*p*Im{C*exp(j*6k*w_s*t)}.  The backward
    field enters the space-vector picture conjugated, which is where the
    fundamental quantities pick up their opposite conjugations, and the
    forward branch carries the leading minus sign: with real phasors the
    branches print as the textbook +sin / -sin pair.  Both branches share
    one global sign convention (the negative of the instantaneous-torque
    orientation), so amplitudes, phase differences, and combined resultants
    all match the time-domain machine model; only absolute phases are
    offset by pi from it.

    The circuit solutions are cosine-referenced (each solve treats its
    voltage as ``V_n*cos(n*w_s*t)`` with zero phase).  A switched line
    voltage is a sine series, so to predict the drive each branch phase
    must additionally be rotated by the voltage phases -- ``phi_v1 +
    phi_vn`` for the backward branch, ``phi_vn - phi_v1`` for the forward
    one, where ``phi = -pi/2`` for a positive sine amplitude and ``+pi/2``
    for a negative one.  That rotation is what turns the nearly aligned
    raw branches below into the near-antiphase pair the machine actually
    exhibits; the prediction layer applies it on top of this function.

    Args:
        fund: Circuit solution at order 1.
        harm: Circuit solution at order 6k-1 or 6k+1.

    Returns:
        The component as a :class:`TorquePhasor` at order 6k.
    """
    if fund.order != 1:
        raise InvalidOrderError(
            f"fund must be the order-1 solution, got order {fund.order}"
        )
    if harm.order == 1 or harm.order % 6 not in (1, 5):
        raise InvalidOrderError(
            f"harm must have order 6k+-1 with k >= 1, got {harm.order}"
        )
    if fund.pole_pairs != harm.pole_pairs:
        raise ValueError(
            "fund and harm were solved for different machines "
            f"(pole pairs {fund.pole_pairs} vs {harm.pole_pairs})"
        )
    if harm.order % 6 == 5:
        c = (
            fund.flux_phasor * harm.rotor_current
            - harm.flux_phasor * fund.rotor_current
        )
        torque_order = harm.order + 1
    else:
        c = (
            harm.flux_phasor * fund.rotor_current.conjugate()
            - fund.flux_phasor.conjugate() * harm.rotor_current
        )
        torque_order = harm.order - 1
    amplitude = 1.5 * fund.pole_pairs * abs(c)
    phase = _wrap_phase(cmath.phase(c) - 0.5 * math.pi) if amplitude else 0.0
    return TorquePhasor(order=torque_order, amplitude=amplitude, phase=phase)


def combine_torque(components) -> TorquePhasor:
    """Vector-sum torque phasors of one harmonic order.

    Args:
        components: Non-empty iterable of :class:`TorquePhasor`, all with
            the same ``order``.

    Returns:
        The resultant :class:`TorquePhasor`.
    """
    items = list(components)
    if not items:
        raise ValueError("combine_torque needs at least one component")
    order = items[0].order
    if any(item.order != order for item in items):
        raise InvalidOrderError(
            f"cannot combine mixed torque orders {[i.order for i in items]}"
        )
    total = sum(
        item.amplitude * cmath.exp(complex(0.0, item.phase)) for item in items
    )
    amplitude = abs(total)
    phase = _wrap_phase(cmath.phase(total)) if amplitude else 0.0
    return TorquePhasor(order=order, amplitude=amplitude, phase=phase)


def torque_estimate_simplified(
    i_r1: float,
    i_r_minus: float,
    i_r_plus: float,
    s1: float,
    omega_s: float,
    r_r: float,
) -> float:
    """Flux-free estimate of the 6k-th torque harmonic amplitude.

    Approximates the fundamental flux through the rotor current, giving

        (3*r_r / (2*omega_s)) * ((1 - s1)/s1) * i_r1 * (i_r_plus - i_r_minus)

    The sign tells which component dominates (positive when the 6k+1
    current is the larger).

    Args:
        i_r1: Fundamental rotor current amplitude (peak A).
        i_r_minus: 6k-1 rotor current amplitude (peak A).
        i_r_plus: 6k+1 rotor current amplitude (peak A).
        s1: Fundamental slip, >= SLIP_EPS (the estimate divides by it).
        omega_s: Electrical frequency (rad/s), > 0.
        r_r: Rotor resistance (ohm).

    Returns:
        Signed torque estimate (N*m).
    """
    if not omega_s > 0.0:
        raise InvalidFrequencyError(f"omega_s must be positive, got {omega_s!r}")
    if s1 < SLIP_EPS:
        raise SingularSlipError(
            f"slip {s1!r} below {SLIP_EPS}: the flux-free estimate divides by s1"
        )
    if min(i_r1, i_r_minus, i_r_plus) < 0.0:
        raise ValueError("current amplitudes must be >= 0")
    return (
        (3.0 * r_r / (2.0 * omega_s))
        * ((1.0 - s1) / s1)
        * i_r1
        * (i_r_plus - i_r_minus)
    )
