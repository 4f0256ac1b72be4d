"""Time-domain verification of two-angle inverter drive predictions.

This module synthesizes the three-phase two-angle inverter waveform,
integrates a dynamic two-axis induction-machine model under a configurable
mechanical load, and extracts harmonic amplitudes from the stored series by
single-bin correlation.  It shares no code with the closed-form Fourier
expressions or the steady-state circuit solves, so its results act as an
independent check of both.

Conventions: simulations start at t = 0 from the given initial state
(default: machine at rest, zero flux).  Stored sample ``k`` corresponds to
t = k * dt_stored, and extracted phases are referenced to cos(n*w_s*t) on
that absolute time axis.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Iterable, Sequence

import numpy as np
from numba import njit

from .angles import SwitchingPattern
from .errors import InstabilityError, SpectralLeakageError, TransientError
from .motor import MotorParameters

TWO_PI = 2.0 * math.pi
_HALF_PI = 0.5 * math.pi
_SQRT3 = math.sqrt(3.0)

#: Minimum integration resolution in steps per fundamental period.
MIN_STEPS_PER_PERIOD = 2000
#: Default integration resolution in steps per fundamental period.
DEFAULT_STEPS_PER_PERIOD = 20000
#: Default storage decimation: one stored sample per this many steps.
DEFAULT_DECIMATION = 10
#: Channels every simulation stores, in CSV column order.
CHANNEL_NAMES = ("tau_e", "omega_m", "i_a", "i_b", "i_c", "v_a", "v_b", "v_c")

_LOAD_KINDS = ("no_load", "linear")


@dataclasses.dataclass(frozen=True)
class LoadSpec:
    """Mechanical load on the shaft.

    Attributes:
        kind: "no_load" (zero torque, zero friction) or "linear" (torque
            proportional to mechanical speed).
        coefficient: Load torque per mechanical speed (N*m*s/rad); used
            only when kind is "linear".
    """

    kind: str
    coefficient: float = 0.0

    def __post_init__(self):
        if self.kind not in _LOAD_KINDS:
            raise ValueError(
                f"load kind must be one of {_LOAD_KINDS}, got {self.kind!r}"
            )
        if not (math.isfinite(self.coefficient) and self.coefficient >= 0.0):
            raise ValueError(
                f"load coefficient must be finite and >= 0, got {self.coefficient!r}"
            )

    @classmethod
    def no_load(cls) -> "LoadSpec":
        return cls(kind="no_load")

    @classmethod
    def linear(cls, coefficient: float) -> "LoadSpec":
        return cls(kind="linear", coefficient=coefficient)


@dataclasses.dataclass(frozen=True)
class TimeSeries:
    """Uniformly sampled simulation output.

    Attributes:
        dt: Spacing of the stored samples (s); sample k sits at t = k*dt.
        channels: Named equal-length float arrays (see CHANNEL_NAMES for
            the set a simulation produces).
    """

    dt: float
    channels: dict

    def __post_init__(self):
        if not (math.isfinite(self.dt) and self.dt > 0.0):
            raise ValueError(f"dt must be finite and > 0, got {self.dt!r}")
        if not self.channels:
            raise ValueError("channels must not be empty")
        lengths = {name: len(values) for name, values in self.channels.items()}
        if len(set(lengths.values())) != 1:
            raise ValueError(f"channels must have equal lengths, got {lengths}")

    def __len__(self) -> int:
        return len(next(iter(self.channels.values())))

    @property
    def t(self) -> np.ndarray:
        """Absolute sample times (s)."""
        return np.arange(len(self)) * self.dt

    def to_csv(self, path) -> None:
        """Write `t,tau_e,omega_m,i_a,i_b,i_c,v_a,v_b,v_c` rows."""
        missing = [name for name in CHANNEL_NAMES if name not in self.channels]
        if missing:
            raise ValueError(f"series lacks channels {missing}")
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("t," + ",".join(CHANNEL_NAMES) + "\n")
            t = self.t
            columns = [self.channels[name] for name in CHANNEL_NAMES]
            for k in range(len(self)):
                row = [f"{t[k]:.12g}"] + [f"{col[k]:.12g}" for col in columns]
                fh.write(",".join(row) + "\n")


@njit(cache=True)
def _pole_level(theta, a1, a2, half_v):
    """Pole voltage of the quarter-wave two-angle pattern at angle theta."""
    th = theta % TWO_PI
    sign = 1.0
    if th >= math.pi:
        th -= math.pi
        sign = -1.0
    x = math.pi - th if th > _HALF_PI else th
    if a1 <= x < a2:
        return -sign * half_v
    return sign * half_v


@njit(cache=True)
def _abc_voltages(mode, theta, a1, a2, half_v, orders, amps, phases):
    """Three phase-to-neutral voltages at electrical angle theta.

    mode 0: two-angle pattern pole voltages minus the neutral shift.
    mode 1: balanced sums of cosine harmonics (verification drive).
    """
    if mode == 0:
        pa = _pole_level(theta, a1, a2, half_v)
        pb = _pole_level(theta - TWO_PI / 3.0, a1, a2, half_v)
        pc = _pole_level(theta + TWO_PI / 3.0, a1, a2, half_v)
    else:
        pa = 0.0
        pb = 0.0
        pc = 0.0
        for i in range(orders.shape[0]):
            n = orders[i]
            amp = amps[i]
            ph = phases[i]
            pa += amp * math.cos(n * theta + ph)
            pb += amp * math.cos(n * (theta - TWO_PI / 3.0) + ph)
            pc += amp * math.cos(n * (theta + TWO_PI / 3.0) + ph)
    vn = (pa + pb + pc) / 3.0
    return pa - vn, pb - vn, pc - vn


@njit(cache=True)
def _state_derivative(
    lsa, lsb, lra, lrb, wm, va, vb, vc,
    rs, rr, ls, lr, lm, inv_d, pole_pairs, inertia, load_code, load_coeff,
):
    """Right-hand side of the stationary-frame flux-state machine model."""
    v_alpha = (2.0 * va - vb - vc) / 3.0
    v_beta = (vb - vc) / _SQRT3
    i_sa = (lr * lsa - lm * lra) * inv_d
    i_sb = (lr * lsb - lm * lrb) * inv_d
    i_ra = (ls * lra - lm * lsa) * inv_d
    i_rb = (ls * lrb - lm * lsb) * inv_d
    tau_e = 1.5 * pole_pairs * (lsa * i_sb - lsb * i_sa)
    tau_load = load_coeff * wm if load_code == 1 else 0.0
    w_e = pole_pairs * wm
    return (
        v_alpha - rs * i_sa,
        v_beta - rs * i_sb,
        -rr * i_ra - w_e * lrb,
        -rr * i_rb + w_e * lra,
        (tau_e - tau_load) / inertia,
    )


@njit(cache=True)
def _integrate(
    mode, a1, a2, half_v, orders, amps, phases,
    omega_s, rs, rr, ls, lr, lm, pole_pairs, inertia,
    load_code, load_coeff, dt, n_steps, decim, speed_limit,
    y0, out_tau, out_wm, out_ia, out_ib, out_ic, out_va, out_vb, out_vc,
):
    """Fixed-step 4th-order integration with decimated storage.

    Returns (status, stored) where status 1 flags a speed excursion past
    ``speed_limit`` (operation beyond the stable region) and stored is the
    number of samples written to the output arrays.
    """
    inv_d = 1.0 / (ls * lr - lm * lm)
    lsa, lsb, lra, lrb, wm = y0[0], y0[1], y0[2], y0[3], y0[4]
    stored = 0
    status = 0
    for k in range(n_steps + 1):
        t = k * dt
        if k % decim == 0:
            va, vb, vc = _abc_voltages(
                mode, omega_s * t, a1, a2, half_v, orders, amps, phases
            )
            i_sa = (lr * lsa - lm * lra) * inv_d
            i_sb = (lr * lsb - lm * lrb) * inv_d
            out_tau[stored] = 1.5 * pole_pairs * (lsa * i_sb - lsb * i_sa)
            out_wm[stored] = wm
            out_ia[stored] = i_sa
            out_ib[stored] = -0.5 * i_sa + 0.5 * _SQRT3 * i_sb
            out_ic[stored] = -0.5 * i_sa - 0.5 * _SQRT3 * i_sb
            out_va[stored] = va
            out_vb[stored] = vb
            out_vc[stored] = vc
            stored += 1
        if k == n_steps:
            break
        va0, vb0, vc0 = _abc_voltages(
            mode, omega_s * t, a1, a2, half_v, orders, amps, phases
        )
        vam, vbm, vcm = _abc_voltages(
            mode, omega_s * (t + 0.5 * dt), a1, a2, half_v, orders, amps, phases
        )
        va1, vb1, vc1 = _abc_voltages(
            mode, omega_s * (t + dt), a1, a2, half_v, orders, amps, phases
        )
        d1 = _state_derivative(
            lsa, lsb, lra, lrb, wm, va0, vb0, vc0,
            rs, rr, ls, lr, lm, inv_d, pole_pairs, inertia, load_code, load_coeff,
        )
        d2 = _state_derivative(
            lsa + 0.5 * dt * d1[0], lsb + 0.5 * dt * d1[1],
            lra + 0.5 * dt * d1[2], lrb + 0.5 * dt * d1[3],
            wm + 0.5 * dt * d1[4], vam, vbm, vcm,
            rs, rr, ls, lr, lm, inv_d, pole_pairs, inertia, load_code, load_coeff,
        )
        d3 = _state_derivative(
            lsa + 0.5 * dt * d2[0], lsb + 0.5 * dt * d2[1],
            lra + 0.5 * dt * d2[2], lrb + 0.5 * dt * d2[3],
            wm + 0.5 * dt * d2[4], vam, vbm, vcm,
            rs, rr, ls, lr, lm, inv_d, pole_pairs, inertia, load_code, load_coeff,
        )
        d4 = _state_derivative(
            lsa + dt * d3[0], lsb + dt * d3[1],
            lra + dt * d3[2], lrb + dt * d3[3],
            wm + dt * d3[4], va1, vb1, vc1,
            rs, rr, ls, lr, lm, inv_d, pole_pairs, inertia, load_code, load_coeff,
        )
        sixth = dt / 6.0
        lsa += sixth * (d1[0] + 2.0 * d2[0] + 2.0 * d3[0] + d4[0])
        lsb += sixth * (d1[1] + 2.0 * d2[1] + 2.0 * d3[1] + d4[1])
        lra += sixth * (d1[2] + 2.0 * d2[2] + 2.0 * d3[2] + d4[2])
        lrb += sixth * (d1[3] + 2.0 * d2[3] + 2.0 * d3[3] + d4[3])
        wm += sixth * (d1[4] + 2.0 * d2[4] + 2.0 * d3[4] + d4[4])
        if not math.isfinite(wm) or abs(wm) > speed_limit:
            status = 1
            break
    return status, stored


def _pole_numpy(theta, a1, a2, half_v):
    th = np.mod(theta, TWO_PI)
    sign = np.where(th >= math.pi, -1.0, 1.0)
    th = np.where(th >= math.pi, th - math.pi, th)
    x = np.where(th > _HALF_PI, math.pi - th, th)
    inverted = (x >= a1) & (x < a2)
    return sign * np.where(inverted, -half_v, half_v)


def synthesize_waveform(pattern: SwitchingPattern, t):
    """Three phase-to-neutral voltages of the two-angle pattern at time t.

    Each pole switches +V_dc/2 / -V_dc/2 following the quarter-wave
    two-angle pattern at the pattern's fundamental frequency, the three
    phases displaced by 2*pi/3; subtracting the neutral-point shift
    cancels triplen components while leaving all 6k+-1 orders intact.

    Args:
        pattern: Switching pattern (carries v_dc and omega_s).
        t: Time (s), scalar or array.

    Returns:
        Tuple (v_a, v_b, v_c) matching the shape of ``t``.
    """
    theta = pattern.omega_s * np.asarray(t, dtype=float)
    scalar = theta.ndim == 0
    theta = np.atleast_1d(theta)
    half_v = 0.5 * pattern.v_dc
    pa = _pole_numpy(theta, pattern.alpha1, pattern.alpha2, half_v)
    pb = _pole_numpy(theta - TWO_PI / 3.0, pattern.alpha1, pattern.alpha2, half_v)
    pc = _pole_numpy(theta + TWO_PI / 3.0, pattern.alpha1, pattern.alpha2, half_v)
    vn = (pa + pb + pc) / 3.0
    va, vb, vc = pa - vn, pb - vn, pc - vn
    if scalar:
        return float(va[0]), float(vb[0]), float(vc[0])
    return va, vb, vc


_EMPTY_I = np.empty(0, dtype=np.int64)
_EMPTY_F = np.empty(0, dtype=np.float64)


def _run(
    params: MotorParameters,
    mode: int,
    pattern_args,
    harmonic_args,
    omega_s: float,
    load: LoadSpec,
    duration: float,
    dt: float | None,
    decimation: int,
    initial_state,
) -> TimeSeries:
    period = TWO_PI / omega_s
    if dt is None:
        dt = period / DEFAULT_STEPS_PER_PERIOD
    if not (math.isfinite(dt) and dt > 0.0):
        raise ValueError(f"dt must be finite and > 0, got {dt!r}")
    if dt > period / MIN_STEPS_PER_PERIOD * (1.0 + 1e-9):
        raise ValueError(
            f"dt={dt!r} too coarse: need at least {MIN_STEPS_PER_PERIOD} steps "
            f"per fundamental period ({period / MIN_STEPS_PER_PERIOD:.3e} s)"
        )
    if not (math.isfinite(duration) and duration >= 20.0 * period):
        raise ValueError(
            f"duration {duration!r} must cover at least 20 fundamental periods "
            f"({20.0 * period:.3f} s)"
        )
    if not (isinstance(decimation, int) and decimation >= 1):
        raise ValueError(f"decimation must be an int >= 1, got {decimation!r}")
    if initial_state is None:
        initial_state = (0.0, 0.0, 0.0, 0.0, 0.0)
    y0 = np.asarray(initial_state, dtype=float)
    if y0.shape != (5,):
        raise ValueError(
            "initial_state must have 5 entries "
            "(stator flux alpha/beta, rotor flux alpha/beta, rotor speed)"
        )

    n_steps = int(round(duration / dt))
    n_stored = n_steps // decimation + 1
    outs = [np.empty(n_stored) for _ in CHANNEL_NAMES]
    load_code = 1 if load.kind == "linear" else 0
    speed_limit = 2.0 * omega_s / params.pole_pairs
    a1, a2, half_v = pattern_args
    orders, amps, phases = harmonic_args
    status, stored = _integrate(
        mode, a1, a2, half_v, orders, amps, phases,
        omega_s, params.r_s, params.r_r,
        params.l_s_self, params.l_r_self, params.l_m,
        params.pole_pairs, params.inertia,
        load_code, load.coefficient, dt, n_steps, decimation, speed_limit,
        y0, *outs,
    )
    if status != 0:
        raise InstabilityError(
            f"rotor speed exceeded {speed_limit:.1f} rad/s during integration: "
            "the operating point lies beyond the stable (sub-breakdown) region"
        )
    channels = {
        name: out[:stored] for name, out in zip(CHANNEL_NAMES, outs)
    }
    return TimeSeries(dt=dt * decimation, channels=channels)


def simulate(
    params: MotorParameters,
    pattern: SwitchingPattern,
    load: LoadSpec,
    duration: float = 2.0,
    dt: float | None = None,
    *,
    decimation: int = DEFAULT_DECIMATION,
    initial_state: Sequence[float] | None = None,
) -> TimeSeries:
    """Integrate the machine under the two-angle pattern, open loop.

    The stationary-frame two-axis model uses the fluxes as states, torque
    1.5*p*(lambda_alpha*i_beta - lambda_beta*i_alpha), and the mechanical
    balance J*dw_m/dt = tau_e - tau_load, advanced by fixed-step 4th-order
    integration from the given initial state (default standstill).

    Args:
        params: Machine parameters.
        pattern: Switching pattern; supplies v_dc and omega_s.
        load: Mechanical load.
        duration: Simulated time (s); must cover >= 20 fundamental periods
            (steady-state windows need start-up to have died out).
        dt: Integration step (s); default is 1/20000 of the fundamental
            period, and anything coarser than 1/2000 is rejected.
        decimation: Store every this-many-th step.
        initial_state: Optional 5-tuple to start from instead of rest.

    Returns:
        A TimeSeries with channels tau_e, omega_m, i_a, i_b, i_c,
        v_a, v_b, v_c.

    Raises:
        InstabilityError: If the speed diverges past 2*omega_s/p,
            signaling operation beyond breakdown slip.
    """
    return _run(
        params,
        0,
        (pattern.alpha1, pattern.alpha2, 0.5 * pattern.v_dc),
        (_EMPTY_I, _EMPTY_F, _EMPTY_F),
        pattern.omega_s,
        load,
        duration,
        dt,
        decimation,
        initial_state,
    )


def simulate_sine_drive(
    params: MotorParameters,
    components: Iterable[tuple],
    omega_s: float,
    load: LoadSpec,
    duration: float = 2.0,
    dt: float | None = None,
    *,
    decimation: int = DEFAULT_DECIMATION,
    initial_state: Sequence[float] | None = None,
) -> TimeSeries:
    """Integrate the machine under a balanced sum of voltage harmonics.

    Phase a sees sum_i A_i*cos(n_i*w_s*t + phi_i); phases b and c see the
    same sums with the electrical angle displaced by -+2*pi/3.  Driving a
    single harmonic in isolation makes this the reference experiment for
    per-component torque predictions; an empty component list leaves the
    machine unforced.

    Args:
        params: Machine parameters.
        components: Iterable of (order, amplitude, phase) with integer
            order >= 1, amplitude >= 0 (peak V), phase in rad.
        omega_s: Fundamental electrical frequency (rad/s), > 0.
        load: Mechanical load.
        duration, dt, decimation, initial_state: As in :func:`simulate`.

    Returns:
        A TimeSeries with the same channels as :func:`simulate`.
    """
    if not (math.isfinite(omega_s) and omega_s > 0.0):
        raise ValueError(f"omega_s must be positive, got {omega_s!r}")
    parsed = [(int(o), float(a), float(p)) for o, a, p in components]
    for order, amp, _ in parsed:
        if order < 1:
            raise ValueError(f"harmonic order must be >= 1, got {order}")
        if not (math.isfinite(amp) and amp >= 0.0):
            raise ValueError(f"harmonic amplitude must be >= 0, got {amp!r}")
    orders = np.array([o for o, _, _ in parsed], dtype=np.int64)
    amps = np.array([a for _, a, _ in parsed], dtype=np.float64)
    phases = np.array([p for _, _, p in parsed], dtype=np.float64)
    return _run(
        params,
        1,
        (0.0, 0.0, 0.0),
        (orders, amps, phases),
        omega_s,
        load,
        duration,
        dt,
        decimation,
        initial_state,
    )


def _single_bin(x: np.ndarray, t: np.ndarray, order: int, omega_s: float):
    """Correlation amplitude and phase of x against cos(order*w_s*t)."""
    if order == 0:
        mean = float(np.mean(x))
        return abs(mean), (0.0 if mean >= 0.0 else math.pi)
    kernel = np.exp(-1j * order * omega_s * t)
    c = 2.0 * complex(np.mean(x * kernel))
    amplitude = abs(c)
    phase = math.atan2(c.imag, c.real)
    if phase <= -math.pi:
        phase = math.pi
    return amplitude, phase


def harmonic_extract(
    series: TimeSeries,
    channel: str,
    order: int,
    omega_s: float,
    *,
    periods: int = 10,
    settle_tol: float = 1e-3,
):
    """Amplitude and phase of one harmonic order in a stored channel.

    Correlates the final ``periods`` fundamental periods of the channel
    against cos(order*w_s*t) (single-bin transform on the absolute time
    axis), after checking that the window is integer-periodic on the
    sampling grid and that the signal has settled.

    Args:
        series: Stored simulation output.
        channel: Channel name in ``series.channels``.
        order: Harmonic order, integer >= 0 (0 returns the mean level).
        omega_s: Fundamental electrical frequency (rad/s), > 0.
        periods: Number of fundamental periods in the analysis window.
        settle_tol: Allowed cycle-to-cycle spread of the extracted
            amplitude, relative to its mean (default 0.1%).

    Returns:
        Tuple (amplitude, phase) with phase in (-pi, pi].

    Raises:
        SpectralLeakageError: If the sampling grid cannot form an exact
            integer-period window.
        TransientError: If the per-cycle amplitudes still drift by more
            than ``settle_tol``.
    """
    if channel not in series.channels:
        raise ValueError(
            f"unknown channel {channel!r}; series has {sorted(series.channels)}"
        )
    if not (isinstance(order, int) and order >= 0):
        raise ValueError(f"order must be an int >= 0, got {order!r}")
    if not (math.isfinite(omega_s) and omega_s > 0.0):
        raise ValueError(f"omega_s must be positive, got {omega_s!r}")
    if not (isinstance(periods, int) and periods >= 1):
        raise ValueError(f"periods must be an int >= 1, got {periods!r}")

    x = np.asarray(series.channels[channel], dtype=float)
    period = TWO_PI / omega_s
    per_cycle = period / series.dt
    n_cycle = int(round(per_cycle))
    if n_cycle < 2 or abs(per_cycle - n_cycle) > 1e-6 * per_cycle:
        raise SpectralLeakageError(
            f"sample spacing {series.dt!r} does not divide the fundamental "
            f"period {period!r}: an integer-period window is impossible"
        )
    n_window = periods * n_cycle
    if n_window > len(x):
        raise ValueError(
            f"series too short: window of {periods} periods needs {n_window} "
            f"samples, series has {len(x)}"
        )
    start = len(x) - n_window
    window = x[start:]
    t = (start + np.arange(n_window)) * series.dt

    if periods >= 2:
        # Settledness: the channel's amplitude over each fundamental cycle
        # (RMS) must have stopped drifting from cycle to cycle.
        cycle_rms = np.sqrt(
            np.mean(window.reshape(periods, n_cycle) ** 2, axis=1)
        )
        floor = 1e-9 * max(1.0, float(np.max(np.abs(window))))
        reference = max(float(np.mean(cycle_rms)), floor)
        spread = float(np.max(cycle_rms) - np.min(cycle_rms)) / reference
        if spread > settle_tol:
            raise TransientError(
                f"channel {channel!r} not settled: per-cycle amplitude "
                f"spread {spread:.2e} exceeds {settle_tol:.2e}"
            )

    return _single_bin(window, t, order, omega_s)
