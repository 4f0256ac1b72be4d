"""Induction-motor equivalent circuit evaluated at the fundamental and at
switching harmonics.

The machine is described by the usual single-phase T circuit: stator branch
``r_s + j*n*w_s*l_ls``, magnetizing branch ``j*n*w_s*l_m`` and rotor branch
``r_r/slip + j*n*w_s*l_lr``.  All voltages and currents here are *peak*
phase quantities, so a torque of ``1.5 * p * Im{conj(flux) * i}`` is
consistent throughout.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass

from .errors import (
    InvalidFrequencyError,
    InvalidOrderError,
    SingularSlipError,
    UnstableRegionError,
)

# Slips below this are rejected by the circuit solve: the rotor branch
# resistance r_r/slip overflows any realistic impedance scale long before,
# and downstream load-dependent estimators divide by the slip.
SLIP_EPS = 1e-6


@dataclass(frozen=True)
class MotorParameters:
    """Per-phase parameters of a squirrel-cage induction machine.

    Attributes:
        r_s: Stator resistance (ohm).
        r_r: Rotor resistance referred to the stator (ohm).
        l_ls: Stator leakage inductance (H).
        l_lr: Rotor leakage inductance referred to the stator (H).
        l_m: Magnetizing inductance (H).
        pole_pairs: Number of pole pairs.
        inertia: Rotor inertia (kg*m^2).  ``math.inf`` locks the shaft.
    """

    r_s: float
    r_r: float
    l_ls: float
    l_lr: float
    l_m: float
    pole_pairs: int
    inertia: float

    def __post_init__(self):
        for name in ("r_s", "r_r", "l_ls", "l_lr", "l_m", "inertia"):
            value = getattr(self, name)
            if not value > 0.0:
                raise ValueError(f"{name} must be positive, got {value!r}")
        if not (isinstance(self.pole_pairs, int) and self.pole_pairs >= 1):
            raise ValueError(
                f"pole_pairs must be an integer >= 1, got {self.pole_pairs!r}"
            )

    @property
    def l_s_self(self) -> float:
        """Stator self inductance l_ls + l_m (H)."""
        return self.l_ls + self.l_m

    @property
    def l_r_self(self) -> float:
        """Rotor self inductance l_lr + l_m (H)."""
        return self.l_lr + self.l_m


_MOTOR_KEYS = {"r_s", "r_r", "l_ls", "l_lr", "l_m", "pole_pairs", "inertia"}
_SELF_KEYS = {"l_s_self", "l_r_self"}


def motor_from_dict(data: dict) -> MotorParameters:
    """Build :class:`MotorParameters` from a plain mapping.

    Leakage inductances may be given either directly (``l_ls``/``l_lr``) or
    through self inductances (``l_s_self``/``l_r_self``), from which the
    leakage is derived as ``self - l_m``.

    Args:
        data: Mapping with the keys described above.

    Returns:
        The validated parameter set.
    """
    unknown = set(data) - _MOTOR_KEYS - _SELF_KEYS
    if unknown:
        raise ValueError(f"unknown motor parameter keys: {sorted(unknown)}")
    values = dict(data)
    if "l_m" not in values:
        raise ValueError("motor parameters require l_m")
    l_m = float(values["l_m"])
    for leak, self_key in (("l_ls", "l_s_self"), ("l_lr", "l_r_self")):
        if self_key in values:
            derived = float(values.pop(self_key)) - l_m
            if leak in values:
                if not math.isclose(
                    float(values[leak]), derived, rel_tol=1e-6, abs_tol=1e-9
                ):
                    raise ValueError(
                        f"inconsistent duplicates: {leak}={values[leak]!r} "
                        f"does not match {self_key} - l_m = {derived!r}"
                    )
            else:
                values[leak] = derived
    missing = _MOTOR_KEYS - set(values)
    if missing:
        raise ValueError(f"missing motor parameter keys: {sorted(missing)}")
    return MotorParameters(
        r_s=float(values["r_s"]),
        r_r=float(values["r_r"]),
        l_ls=float(values["l_ls"]),
        l_lr=float(values["l_lr"]),
        l_m=float(values["l_m"]),
        pole_pairs=int(values["pole_pairs"]),
        inertia=float(values["inertia"]),
    )


def load_motor_json(path) -> MotorParameters:
    """Load motor parameters from a JSON file (see :func:`motor_from_dict`)."""
    with open(path, "r", encoding="utf-8") as handle:
        return motor_from_dict(json.load(handle))


@dataclass(frozen=True)
class OperatingPoint:
    """A steady operating point of the drive.

    Attributes:
        omega_s: Synchronous electrical angular frequency (rad/s).
        omega_m: Mechanical rotor speed (rad/s).
        s1: Fundamental slip, must lie in [0, 1].
    """

    omega_s: float
    omega_m: float
    s1: float

    def __post_init__(self):
        if not self.omega_s > 0.0:
            raise InvalidFrequencyError(
                f"omega_s must be positive, got {self.omega_s!r}"
            )
        if not 0.0 <= self.s1 <= 1.0:
            raise ValueError(f"fundamental slip s1 must lie in [0, 1], got {self.s1!r}")

    @classmethod
    def from_speeds(
        cls, omega_s: float, omega_m: float, pole_pairs: int
    ) -> "OperatingPoint":
        """Construct from speeds, deriving the slip consistently."""
        return cls(omega_s, omega_m, fundamental_slip(omega_s, omega_m, pole_pairs))


def fundamental_slip(omega_s: float, omega_m: float, pole_pairs: int) -> float:
    """Fundamental slip (omega_s - p*omega_m) / omega_s.

    Args:
        omega_s: Synchronous electrical angular frequency (rad/s), > 0.
        omega_m: Mechanical rotor speed (rad/s).
        pole_pairs: Number of pole pairs.

    Returns:
        The slip; may fall outside [0, 1] for generating/plugging speeds.
    """
    if not omega_s > 0.0:
        raise InvalidFrequencyError(f"omega_s must be positive, got {omega_s!r}")
    return (omega_s - pole_pairs * omega_m) / omega_s


def harmonic_slip(k: int, sequence: str, s1: float) -> float:
    """Slip seen by a 6k-/+1 harmonic field.

    The (6k-1)th harmonic rotates against the rotor (backward sequence), the
    (6k+1)th with it, giving

        s_minus = 1 + (1 - s1) / (6k - 1)
        s_plus  = 1 - (1 - s1) / (6k + 1)

    Args:
        k: Harmonic group index, k >= 1 (k=1 covers orders 5 and 7).
        sequence: "minus" for order 6k-1, "plus" for order 6k+1.
        s1: Fundamental slip in [0, 1].

    Returns:
        The harmonic slip (dimensionless).
    """
    if not (isinstance(k, int) and k >= 1):
        raise InvalidOrderError(f"harmonic group index k must be >= 1, got {k!r}")
    if not 0.0 <= s1 <= 1.0:
        raise ValueError(f"fundamental slip s1 must lie in [0, 1], got {s1!r}")
    if sequence == "minus":
        return 1.0 + (1.0 - s1) / (6 * k - 1)
    if sequence == "plus":
        return 1.0 - (1.0 - s1) / (6 * k + 1)
    raise ValueError(f"sequence must be 'minus' or 'plus', got {sequence!r}")


def _check_order(order: int) -> None:
    """Reject orders outside {1} | {6k+-1}: even or triplen."""
    if not (isinstance(order, int) and order >= 1):
        raise InvalidOrderError(f"harmonic order must be a positive int, got {order!r}")
    if order % 2 == 0 or order % 3 == 0:
        raise InvalidOrderError(
            f"order {order} is absent from a balanced quarter-wave pattern "
            "(even and triplen orders are unsupported)"
        )


def rotor_current_phase(
    order: int, slip: float, params: MotorParameters, omega_s: float
) -> float:
    """Phase lag of the referred rotor current behind the applied voltage.

    Closed form

        phi_n = atan( n*w_s*(l_ls + l_lr) /
                      ((l_m/(l_m + l_ls))^2 * r_s + r_r/slip) )

    where the stator resistance is reflected through the magnetizing
    divider.  ``slip == 0`` returns the open-rotor limit 0.

    Args:
        order: Harmonic order n (1 or 6k+-1).
        slip: Slip of that harmonic field, >= 0.
        params: Machine parameters.
        omega_s: Fundamental electrical frequency (rad/s), > 0.

    Returns:
        Phase lag in radians, in [0, pi/2).
    """
    _check_order(order)
    if not omega_s > 0.0:
        raise InvalidFrequencyError(f"omega_s must be positive, got {omega_s!r}")
    if slip < 0.0:
        raise SingularSlipError(f"slip must be non-negative, got {slip!r}")
    if slip == 0.0:
        return 0.0
    numerator = order * omega_s * (params.l_ls + params.l_lr)
    reflected = (params.l_m / (params.l_m + params.l_ls)) ** 2 * params.r_s
    return math.atan(numerator / (reflected + params.r_r / slip))


@dataclass(frozen=True)
class HarmonicSolution:
    """Steady-state circuit solution for one harmonic order.

    Attributes:
        order: Harmonic order n.
        slip_n: Slip of the harmonic field.
        rotor_current: Referred rotor current phasor (peak A).  The amplitude
            comes from the full circuit solve; the phase is ``-phi_n``
            relative to a zero-angle applied voltage.
        magnetizing_flux: Peak magnetizing flux amplitude |E_mn|/(n*w_s) (Wb).
        phi_n: Closed-form rotor current lag (rad), see
            :func:`rotor_current_phase`.
        impedance: Complex input impedance of the whole circuit (ohm).
        flux_phasor: Complex magnetizing flux phasor (Wb) from the full
            solve, same zero-angle voltage reference.
        pole_pairs: Pole pairs of the machine the solve was made for.
    """

    order: int
    slip_n: float
    rotor_current: complex
    magnetizing_flux: float
    phi_n: float
    impedance: complex
    flux_phasor: complex
    pole_pairs: int


def harmonic_circuit_solve(
    order: int,
    voltage: float,
    slip: float,
    params: MotorParameters,
    omega_s: float,
) -> HarmonicSolution:
    """Solve the per-phase equivalent circuit at one harmonic order.

    Args:
        order: Harmonic order n (1 or 6k+-1; even/triplen rejected).
        voltage: Peak phase voltage amplitude of that order (V), >= 0.
        slip: Slip of that harmonic field; values below ``SLIP_EPS`` are
            rejected rather than clamped.
        params: Machine parameters.
        omega_s: Fundamental electrical frequency (rad/s), > 0.

    Returns:
        A :class:`HarmonicSolution` with phasors referenced to a zero-angle
        applied voltage.
    """
    _check_order(order)
    if not omega_s > 0.0:
        raise InvalidFrequencyError(f"omega_s must be positive, got {omega_s!r}")
    if voltage < 0.0:
        raise ValueError(f"voltage amplitude must be >= 0, got {voltage!r}")
    if slip < SLIP_EPS:
        raise SingularSlipError(
            f"slip {slip!r} below {SLIP_EPS} makes the rotor branch singular"
        )
    w_n = order * omega_s
    z_s = complex(params.r_s, w_n * params.l_ls)
    z_m = complex(0.0, w_n * params.l_m)
    z_r = complex(params.r_r / slip, w_n * params.l_lr)
    z_parallel = z_m * z_r / (z_m + z_r)
    z_in = z_s + z_parallel
    i_s = voltage / z_in
    e_m = i_s * z_parallel
    flux_phasor = e_m / complex(0.0, w_n)
    i_r_exact = e_m / z_r
    phi_n = rotor_current_phase(order, slip, params, omega_s)
    rotor_current = abs(i_r_exact) * cmath.exp(complex(0.0, -phi_n))
    return HarmonicSolution(
        order=order,
        slip_n=slip,
        rotor_current=rotor_current,
        magnetizing_flux=abs(flux_phasor),
        phi_n=phi_n,
        impedance=z_in,
        flux_phasor=flux_phasor,
        pole_pairs=params.pole_pairs,
    )


def steady_state_torque(
    params: MotorParameters, v1: float, slip: float, omega_s: float
) -> float:
    """Average electromagnetic torque from the fundamental circuit.

    Args:
        params: Machine parameters.
        v1: Peak fundamental phase voltage (V).
        slip: Fundamental slip, >= 0 (0 returns exactly 0 torque).
        omega_s: Electrical frequency (rad/s), > 0.

    Returns:
        Torque in N*m: ``1.5 * p * |i_r|^2 * (r_r/slip) / omega_s``.
    """
    if not omega_s > 0.0:
        raise InvalidFrequencyError(f"omega_s must be positive, got {omega_s!r}")
    if slip < 0.0:
        raise SingularSlipError(f"slip must be non-negative, got {slip!r}")
    if slip == 0.0:
        return 0.0
    z_s = complex(params.r_s, omega_s * params.l_ls)
    z_m = complex(0.0, omega_s * params.l_m)
    z_r = complex(params.r_r / slip, omega_s * params.l_lr)
    z_in = z_s + z_m * z_r / (z_m + z_r)
    i_s = v1 / z_in
    i_r = i_s * z_m / (z_m + z_r)
    return (
        1.5
        * params.pole_pairs
        * abs(i_r) ** 2
        * (params.r_r / slip)
        / omega_s
    )


def breakdown_slip(params: MotorParameters, omega_s: float) -> float:
    """Slip of maximum (breakdown) torque via the Thevenin reduction."""
    if not omega_s > 0.0:
        raise InvalidFrequencyError(f"omega_s must be positive, got {omega_s!r}")
    z_s = complex(params.r_s, omega_s * params.l_ls)
    z_m = complex(0.0, omega_s * params.l_m)
    z_th = z_s * z_m / (z_s + z_m)
    return params.r_r / abs(z_th + complex(0.0, omega_s * params.l_lr))


def equilibrium_slip(
    params: MotorParameters,
    v1: float,
    omega_s: float,
    tau_load,
    tol: float = 1e-12,
) -> float:
    """Slip at which motor torque balances the load, on the stable branch.

    Args:
        params: Machine parameters.
        v1: Peak fundamental phase voltage (V).
        omega_s: Electrical frequency (rad/s), > 0.
        tau_load: Callable mapping mechanical speed (rad/s) to load torque
            (N*m); evaluated only on [0, synchronous speed].
        tol: Bisection slip tolerance.

    Returns:
        The equilibrium slip in [0, breakdown slip].
    """

    def balance(slip: float) -> float:
        omega_m = (1.0 - slip) * omega_s / params.pole_pairs
        return steady_state_torque(params, v1, slip, omega_s) - tau_load(omega_m)

    residual_sync = balance(0.0)
    if residual_sync >= 0.0:
        # No load at synchronous speed: the machine idles at zero slip.
        return 0.0
    s_bd = breakdown_slip(params, omega_s)
    hi = min(s_bd, 1.0)
    if balance(hi) < 0.0:
        raise UnstableRegionError(
            f"load exceeds the stable torque capability up to slip {hi:.4g}"
        )
    lo = 0.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if balance(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
