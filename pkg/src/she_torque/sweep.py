"""Experiment driver: method sweeps, feasibility curves, and phase curves.

This module turns a JSON experiment configuration into result tables:
per-(modulation-index, method) operating points with predicted and
simulated 6th-harmonic torque amplitudes, the maximum-modulation-index
curve over a harmonic-ratio grid, and the fundamental-current-phase curve
over a mechanical-load grid.  Tables serialize to CSV with fixed
formatting so identical configurations produce byte-identical files.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Callable, Sequence

from .angles import (
    CLASSIC_VOLTAGE_RATIO,
    SwitchingPattern,
    classic_angles,
    fourier_amplitude,
    max_mi,
    solve_ratio,
    solve_she_pwm,
)
from .errors import (
    ConfigError,
    EmptyResultError,
    InfeasibleError,
    InstabilityError,
    NoMinimizingRatioError,
    TransientError,
    UnstableRegionError,
)
from .motor import (
    SLIP_EPS,
    MotorParameters,
    equilibrium_slip,
    fundamental_slip,
    harmonic_circuit_solve,
    harmonic_slip,
    motor_from_dict,
    rotor_current_phase,
)
from .phasors import (
    MethodVariant,
    TorquePhasor,
    combine_torque,
    delta_theta_estimate,
    target_voltage_ratio,
    torque_component_phasors,
)
from .simulator import LoadSpec, harmonic_extract, simulate

TWO_PI = 2.0 * math.pi

#: A harmonic voltage below this fraction of the bus voltage is treated as
#: absent (solver residuals leave ~1e-12 V on eliminated orders).
_VOLTAGE_EPS = 1e-9

#: Default linear-load coefficient (N*m*s/rad): a 3 kW machine loaded to
#: rated torque at its rated speed of 1415 rpm.
RATED_SPEED = 1415.0 * TWO_PI / 60.0
RATED_TORQUE = 3000.0 / RATED_SPEED
DEFAULT_LOAD_COEFFICIENT = RATED_TORQUE / RATED_SPEED

#: Canonical method order for default sweeps.
ALL_METHODS = (
    MethodVariant.SHE_PWM,
    MethodVariant.CLASSIC,
    MethodVariant.RATIO_I,
    MethodVariant.RATIO_II,
)

#: Experiment conditions; all but "custom" carry frequency/load defaults.
CONDITIONS = ("no_load_50", "linear_50", "linear_45", "custom")

_CONDITION_DEFAULTS = {
    "no_load_50": (50.0, LoadSpec.no_load),
    "linear_50": (50.0, lambda: LoadSpec.linear(DEFAULT_LOAD_COEFFICIENT)),
    "linear_45": (45.0, lambda: LoadSpec.linear(DEFAULT_LOAD_COEFFICIENT)),
}

_SIM_DURATION = 2.0
_RETRY_DURATION = 4.0
_ANALYSIS_PERIODS = 10

_RATIO_METHODS = (MethodVariant.RATIO_I, MethodVariant.RATIO_II)


@dataclasses.dataclass(frozen=True)
class ExperimentConfig:
    """A validated sweep experiment description.

    Attributes:
        motor: Machine parameters.
        mi_grid: Strictly increasing modulation indices, each in (0, 1].
        condition: One of CONDITIONS; non-custom conditions supply default
            frequency and load (explicit fields always win).
        v_dc: DC bus voltage (V).
        frequency_hz: Fundamental frequency (Hz), > 0.
        methods: Ordered methods to sweep.
        load: Mechanical load.
        simulate: Whether each operating point also runs the time-domain
            simulation (False keeps runs frequency-domain only).
    """

    motor: MotorParameters
    mi_grid: tuple
    condition: str = "no_load_50"
    v_dc: float = 560.0
    frequency_hz: float = 50.0
    methods: tuple = ALL_METHODS
    load: LoadSpec = dataclasses.field(default_factory=LoadSpec.no_load)
    simulate: bool = True

    def __post_init__(self):
        object.__setattr__(self, "mi_grid", tuple(self.mi_grid))
        object.__setattr__(self, "methods", tuple(self.methods))
        if self.condition not in CONDITIONS:
            raise ConfigError(
                f"condition must be one of {CONDITIONS}, got {self.condition!r}"
            )
        if not self.mi_grid:
            raise ConfigError("mi_grid must not be empty")
        for mi in self.mi_grid:
            if not 0.0 < mi <= 1.0:
                raise ConfigError(f"mi_grid values must lie in (0, 1], got {mi!r}")
        if any(b <= a for a, b in zip(self.mi_grid, self.mi_grid[1:])):
            raise ConfigError(f"mi_grid must be strictly increasing: {self.mi_grid}")
        if not (math.isfinite(self.frequency_hz) and self.frequency_hz > 0.0):
            raise ConfigError(f"frequency_hz must be > 0, got {self.frequency_hz!r}")
        if not self.v_dc > 0.0:
            raise ConfigError(f"v_dc must be > 0, got {self.v_dc!r}")
        if not self.methods:
            raise ConfigError("methods must not be empty")
        if any(not isinstance(m, MethodVariant) for m in self.methods):
            raise ConfigError(f"methods must be MethodVariant members: {self.methods}")
        if len(set(self.methods)) != len(self.methods):
            raise ConfigError(f"methods must be unique, got {self.methods}")

    @property
    def omega_s(self) -> float:
        """Fundamental electrical frequency (rad/s)."""
        return TWO_PI * self.frequency_hz

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        """Parse a plain mapping (deserialized JSON) into a config.

        The ``condition`` key selects defaults for ``frequency_hz`` and
        ``load``; any explicitly given field overrides them.  ``methods``
        entries are method names; ``load`` is a mapping with ``kind`` and
        optional ``coefficient``.
        """
        if not isinstance(data, dict):
            raise ConfigError(f"config must be a mapping, got {type(data).__name__}")
        known = {
            "motor", "mi_grid", "condition", "v_dc", "frequency_hz",
            "methods", "load", "simulate",
        }
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        if "motor" not in data:
            raise ConfigError("config requires a motor block")
        if "mi_grid" not in data:
            raise ConfigError("config requires mi_grid")
        try:
            motor = motor_from_dict(data["motor"])
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"bad motor block: {exc}") from exc

        condition = data.get("condition", "no_load_50")
        if condition not in CONDITIONS:
            raise ConfigError(
                f"condition must be one of {CONDITIONS}, got {condition!r}"
            )
        if condition == "custom":
            if "frequency_hz" not in data:
                raise ConfigError("custom condition requires frequency_hz")
            frequency = data["frequency_hz"]
            load_spec = _parse_load(data.get("load", {"kind": "no_load"}))
        else:
            default_hz, default_load = _CONDITION_DEFAULTS[condition]
            frequency = data.get("frequency_hz", default_hz)
            load_spec = (
                _parse_load(data["load"]) if "load" in data else default_load()
            )

        methods = _parse_methods(data.get("methods"))
        try:
            mi_grid = tuple(float(v) for v in data["mi_grid"])
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"bad mi_grid: {exc}") from exc
        simulate_flag = data.get("simulate", True)
        if not isinstance(simulate_flag, bool):
            raise ConfigError(f"simulate must be a boolean, got {simulate_flag!r}")
        try:
            v_dc = float(data.get("v_dc", 560.0))
            frequency = float(frequency)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"bad numeric field: {exc}") from exc
        return cls(
            motor=motor,
            mi_grid=mi_grid,
            condition=condition,
            v_dc=v_dc,
            frequency_hz=frequency,
            methods=methods,
            load=load_spec,
            simulate=simulate_flag,
        )


def _parse_load(data) -> LoadSpec:
    if isinstance(data, LoadSpec):
        return data
    if not isinstance(data, dict) or "kind" not in data:
        raise ConfigError(f"load must be a mapping with a 'kind', got {data!r}")
    unknown = set(data) - {"kind", "coefficient"}
    if unknown:
        raise ConfigError(f"unknown load keys: {sorted(unknown)}")
    try:
        return LoadSpec(
            kind=data["kind"], coefficient=float(data.get("coefficient", 0.0))
        )
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad load block: {exc}") from exc


def _parse_methods(raw) -> tuple:
    if raw is None:
        return ALL_METHODS
    if isinstance(raw, (str, MethodVariant)):
        raw = [raw]
    methods = []
    for item in raw:
        if isinstance(item, MethodVariant):
            methods.append(item)
            continue
        try:
            methods.append(MethodVariant[str(item)])
        except KeyError:
            names = [m.name for m in MethodVariant]
            raise ConfigError(
                f"unknown method {item!r}; expected one of {names}"
            ) from None
    return tuple(methods)


@dataclasses.dataclass(frozen=True)
class SweepRow:
    """One (modulation index, method) cell of a sweep result table.

    Optional fields are None when the stage that produces them did not run
    (infeasible angles, skipped simulation, unstable load); CSV writes
    None as an empty field.
    """

    condition: str
    mi: float
    method: str
    slip: float | None
    alpha1_deg: float | None
    alpha2_deg: float | None
    v5_over_v7: float | None
    predicted_a6: float | None
    simulated_a6: float | None
    status: str
    residual: float | None


SWEEP_COLUMNS = (
    "condition", "mi", "method", "slip", "alpha1_deg", "alpha2_deg",
    "v5_over_v7", "predicted_a6", "simulated_a6", "status", "residual",
)


def predict_sixth_harmonic(
    pattern: SwitchingPattern, params: MotorParameters, s1: float
) -> TorquePhasor:
    """Predicted 6th-harmonic torque phasor for a switching pattern.

    The pattern's voltage components form a sine series with signed
    amplitudes, while the circuit solutions are referenced to zero-phase
    cosine drives.  Referencing each branch to the pattern therefore adds
    the voltage phases (-pi/2 for a positive sine amplitude, +pi/2 for a
    negative one): the 6k-1 branch shifts by phi_v1 + phi_v5 and the 6k+1
    branch by phi_v7 - phi_v1.  With all amplitudes positive this puts the
    two branches in near-antiphase, which is what makes ratio-targeted
    cancellation possible at all; time-domain runs confirm the rotated
    resultant to a fraction of a percent.

    Args:
        pattern: Switching pattern (supplies the voltage amplitudes, the
            bus voltage, and omega_s).
        params: Machine parameters.
        s1: Fundamental slip; values below the circuit model's singular
            floor are clamped up to it, so an ideal no-load point (slip
            exactly 0) yields the open-rotor limit instead of an error.

    Returns:
        The resultant order-6 :class:`TorquePhasor` (amplitude 0 when the
        pattern carries neither a 5th nor a 7th harmonic).
    """
    s1 = max(float(s1), SLIP_EPS)
    v1 = fourier_amplitude(pattern, 1)
    v5 = fourier_amplitude(pattern, 5)
    v7 = fourier_amplitude(pattern, 7)
    fund = harmonic_circuit_solve(1, abs(v1), s1, params, pattern.omega_s)

    def sine_phase(v: float) -> float:
        return -0.5 * math.pi if v >= 0.0 else 0.5 * math.pi

    floor = _VOLTAGE_EPS * pattern.v_dc
    components = []
    if abs(v5) > floor:
        harm = harmonic_circuit_solve(
            5, abs(v5), harmonic_slip(1, "minus", s1), params, pattern.omega_s
        )
        raw = torque_component_phasors(fund, harm)
        components.append(
            dataclasses.replace(
                raw, phase=_wrap(raw.phase + sine_phase(v1) + sine_phase(v5))
            )
        )
    if abs(v7) > floor:
        harm = harmonic_circuit_solve(
            7, abs(v7), harmonic_slip(1, "plus", s1), params, pattern.omega_s
        )
        raw = torque_component_phasors(fund, harm)
        components.append(
            dataclasses.replace(
                raw, phase=_wrap(raw.phase + sine_phase(v7) - sine_phase(v1))
            )
        )
    if not components:
        return TorquePhasor(order=6, amplitude=0.0, phase=0.0)
    return combine_torque(components)


def method_ratio_target(
    method: MethodVariant, params: MotorParameters, s1: float, omega_s: float
) -> float:
    """Operating-point voltage-ratio target for a ratio-driven method.

    Builds the harmonic slips and the phase-difference estimate from the
    circuit at slip ``s1`` and returns the method's target (V5/V7 for
    RATIO_I, V7/V5 for RATIO_II).

    Raises:
        NoMinimizingRatioError: Propagated when the phase difference puts
            cancellation out of reach of any positive ratio.
        ValueError: For methods without a load-dependent ratio.
    """
    if method not in _RATIO_METHODS:
        raise ValueError(f"{method.name} has no load-dependent ratio target")
    s1 = max(float(s1), 0.0)
    s_minus = harmonic_slip(1, "minus", s1)
    s_plus = harmonic_slip(1, "plus", s1)
    delta = delta_theta_estimate(
        rotor_current_phase(1, s1, params, omega_s),
        rotor_current_phase(5, s_minus, params, omega_s),
        rotor_current_phase(7, s_plus, params, omega_s),
    )
    return target_voltage_ratio(method, s_minus, s_plus, delta)


def _wrap(angle: float) -> float:
    wrapped = math.remainder(angle, TWO_PI)
    return math.pi if wrapped <= -math.pi else wrapped


def _solve_for_method(
    method: MethodVariant,
    mi: float,
    params: MotorParameters,
    s1: float,
    v_dc: float,
    omega_s: float,
):
    """Angles for one method at one operating point.

    Returns (report, status, ratio_used): status is "ok" or "she_fallback"
    (ratio target undefined at this operating point, so the fifth was
    eliminated outright); ratio_used is the harmonic-ratio constraint the
    solve actually enforced, None when the constraint was V5 = 0.
    """
    if method is MethodVariant.SHE_PWM:
        return solve_she_pwm(mi, v_dc=v_dc, omega_s=omega_s), "ok", None
    if method is MethodVariant.CLASSIC:
        report = classic_angles(mi, v_dc=v_dc, omega_s=omega_s)
        return report, "ok", CLASSIC_VOLTAGE_RATIO
    try:
        ratio = method_ratio_target(method, params, s1, omega_s)
    except NoMinimizingRatioError:
        return solve_she_pwm(mi, v_dc=v_dc, omega_s=omega_s), "she_fallback", None
    report = solve_ratio(mi, ratio, method, v_dc=v_dc, omega_s=omega_s)
    return report, "ok", ratio


def _circuit_slip(config: ExperimentConfig, mi: float) -> float:
    """Steady-state slip balancing the load law against circuit torque."""
    v1 = mi * 2.0 * config.v_dc / math.pi
    if config.load.kind == "no_load":
        tau_load: Callable[[float], float] = lambda _w: 0.0
    else:
        coefficient = config.load.coefficient
        tau_load = lambda w: coefficient * w
    return equilibrium_slip(config.motor, v1, config.omega_s, tau_load)


def _simulate_a6(config: ExperimentConfig, pattern: SwitchingPattern):
    """Run the drive and return (simulated A6, simulated slip).

    Retries once with a longer horizon if the analysis window has not
    settled at the default duration.
    """
    for duration in (_SIM_DURATION, _RETRY_DURATION):
        series = simulate(config.motor, pattern, config.load, duration=duration)
        try:
            amp, _ = harmonic_extract(
                series, "tau_e", 6, config.omega_s, periods=_ANALYSIS_PERIODS
            )
            speed_mag, speed_phase = harmonic_extract(
                series, "omega_m", 0, config.omega_s, periods=_ANALYSIS_PERIODS
            )
        except TransientError:
            continue
        omega_m = speed_mag if speed_phase == 0.0 else -speed_mag
        slip = fundamental_slip(config.omega_s, omega_m, config.motor.pole_pairs)
        return amp, slip
    raise TransientError(
        f"drive response did not settle within {_RETRY_DURATION} s"
    )


def _try_simulate(config: ExperimentConfig, pattern: SwitchingPattern):
    """(result, failure): result is (A6, slip) on success, else failure is
    the flag status "unstable" or "transient"."""
    try:
        return _simulate_a6(config, pattern), None
    except InstabilityError:
        return None, "unstable"
    except TransientError:
        return None, "transient"


def _pattern_residual(
    pattern: SwitchingPattern,
    mi: float,
    method: MethodVariant,
    ratio_used: float | None,
) -> float:
    """Round-trip residual of the emitted angles.

    Recomputes the modulation index and the harmonic constraint through
    :func:`fourier_amplitude` (not the solver internals) and returns the
    larger normalized error.  ``ratio_used`` None means the constraint
    was outright elimination of the fifth.
    """
    scale = 2.0 * pattern.v_dc / math.pi
    mi_error = abs(fourier_amplitude(pattern, 1) / scale - mi)
    v5 = fourier_amplitude(pattern, 5)
    v7 = fourier_amplitude(pattern, 7)
    if ratio_used is None:
        harmonic_error = abs(v5) / scale
    elif method is MethodVariant.RATIO_II:
        harmonic_error = abs(v7 - ratio_used * v5) / (scale * max(1.0, ratio_used))
    else:
        harmonic_error = abs(v5 - ratio_used * v7) / (scale * max(1.0, ratio_used))
    return max(mi_error, harmonic_error)


def _sweep_cell(config: ExperimentConfig, mi: float, method: MethodVariant):
    """Produce one SweepRow; per-cell failures become flagged rows."""

    def row(**kwargs) -> SweepRow:
        base = dict(
            condition=config.condition,
            mi=mi,
            method=method.name,
            slip=None,
            alpha1_deg=None,
            alpha2_deg=None,
            v5_over_v7=None,
            predicted_a6=None,
            simulated_a6=None,
            status="ok",
            residual=None,
        )
        base.update(kwargs)
        return SweepRow(**base)

    try:
        slip = _circuit_slip(config, mi)
    except UnstableRegionError:
        return row(status="unstable")

    try:
        report, status, ratio_used = _solve_for_method(
            method, mi, config.motor, slip, config.v_dc, config.omega_s
        )
    except InfeasibleError:
        return row(slip=slip, status="infeasible")
    pattern = report.pattern

    simulated_a6 = None
    if config.simulate:
        result, failure = _try_simulate(config, pattern)
        if failure is None:
            simulated_a6, slip = result
            # One on-line refinement pass: ratio targets move with the
            # realized slip, so re-solve there and re-measure.
            if status == "ok" and method in _RATIO_METHODS:
                try:
                    report, status, ratio_used = _solve_for_method(
                        method, mi, config.motor, slip, config.v_dc,
                        config.omega_s,
                    )
                except InfeasibleError:
                    return row(slip=slip, status="infeasible")
                pattern = report.pattern
                result, failure = _try_simulate(config, pattern)
                if failure is None:
                    simulated_a6, slip = result
        if failure is not None:
            status = failure
            simulated_a6 = None

    predicted = predict_sixth_harmonic(pattern, config.motor, slip)
    v7 = fourier_amplitude(pattern, 7)
    return row(
        slip=slip,
        alpha1_deg=math.degrees(pattern.alpha1),
        alpha2_deg=math.degrees(pattern.alpha2),
        v5_over_v7=(
            fourier_amplitude(pattern, 5) / v7 if v7 != 0.0 else None
        ),
        predicted_a6=predicted.amplitude,
        simulated_a6=simulated_a6,
        status=status,
        residual=_pattern_residual(pattern, mi, method, ratio_used),
    )


def run_sweep(config: ExperimentConfig) -> tuple:
    """All (mi, method) cells of the configured experiment, in config order.

    Returns:
        A tuple of :class:`SweepRow`, |mi_grid| x |methods| long; cells
        that fail (infeasible angles, unstable load, unsettled runs) are
        flagged rows, not errors.

    Raises:
        EmptyResultError: If no cell produced solved angles; the flagged
            rows ride on the exception's ``rows`` attribute.
    """
    rows = tuple(
        _sweep_cell(config, mi, method)
        for mi in config.mi_grid
        for method in config.methods
    )
    if all(r.alpha1_deg is None for r in rows):
        raise EmptyResultError(
            "no feasible (mi, method) operating point in the configured grid",
            rows=rows,
        )
    return rows


@dataclasses.dataclass(frozen=True)
class MaxMiRow:
    """One point (or the summary) of a feasibility-ceiling curve."""

    variant: str
    ratio: float
    mi_max: float
    alpha1_deg: float
    alpha2_deg: float
    kind: str  # "point" or "summary"


MAX_MI_COLUMNS = ("variant", "ratio", "mi_max", "alpha1_deg", "alpha2_deg", "kind")


def run_max_mi_curve(
    variant: MethodVariant,
    ratio_grid: Sequence[float],
    *,
    v_dc: float = 560.0,
    omega_s: float = TWO_PI * 50.0,
) -> tuple:
    """Feasibility ceiling per ratio plus a summary row at the curve max.

    Args:
        variant: Constraint family whose ratio the grid scans.
        ratio_grid: Non-empty, non-negative target ratios, scanned in the
            given order.
        v_dc: DC bus voltage stamped on returned angle pairs.
        omega_s: Fundamental frequency stamped on returned angle pairs.

    Returns:
        Tuple of :class:`MaxMiRow`: one "point" row per ratio followed by
        one "summary" row locating the curve maximum (first maximizer on
        ties).
    """
    if len(ratio_grid) == 0:
        raise ConfigError("ratio_grid must not be empty")
    ratios = [float(r) for r in ratio_grid]
    if any(r < 0.0 for r in ratios):
        raise ConfigError(f"ratio_grid must be non-negative, got {ratios}")
    rows = []
    for ratio in ratios:
        result = max_mi(ratio, variant, v_dc=v_dc, omega_s=omega_s)
        rows.append(
            MaxMiRow(
                variant=variant.name,
                ratio=ratio,
                mi_max=result.mi_max,
                alpha1_deg=math.degrees(result.pattern.alpha1),
                alpha2_deg=math.degrees(result.pattern.alpha2),
                kind="point",
            )
        )
    best = max(range(len(rows)), key=lambda i: (rows[i].mi_max, -i))
    rows.append(dataclasses.replace(rows[best], kind="summary"))
    return tuple(rows)


@dataclasses.dataclass(frozen=True)
class PhaseRow:
    """One mechanical-load point of the fundamental-phase curve."""

    load_torque: float
    slip: float | None
    phi1_deg: float | None
    status: str


PHASE_COLUMNS = ("load_torque", "slip", "phi1_deg", "status")


def run_phase_sweep(
    params: MotorParameters,
    frequency_hz: float,
    load_grid: Sequence[float],
    *,
    v1: float = 2.0 * 560.0 / math.pi,
) -> tuple:
    """Fundamental rotor-current phase across a constant-torque load grid.

    Each load point solves the equilibrium slip (torque balance on the
    stable branch) and evaluates the closed-form phase there.  Loads the
    machine cannot carry below breakdown yield flagged rows.

    Args:
        params: Machine parameters.
        frequency_hz: Fundamental frequency (Hz), > 0.
        load_grid: Non-empty constant load torques (N*m), each >= 0.
        v1: Peak fundamental phase voltage (V); defaults to the full-bus
            (square-wave) fundamental of a 560 V link.

    Returns:
        Tuple of :class:`PhaseRow` in grid order.
    """
    if not frequency_hz > 0.0:
        raise ConfigError(f"frequency_hz must be > 0, got {frequency_hz!r}")
    if len(load_grid) == 0:
        raise ConfigError("load_grid must not be empty")
    loads = [float(tau) for tau in load_grid]
    if any(tau < 0.0 for tau in loads):
        raise ConfigError(f"load torques must be >= 0, got {loads}")
    omega_s = TWO_PI * frequency_hz
    rows = []
    for tau in loads:
        try:
            slip = equilibrium_slip(params, v1, omega_s, lambda _w: tau)
        except UnstableRegionError:
            rows.append(
                PhaseRow(load_torque=tau, slip=None, phi1_deg=None,
                         status="unstable")
            )
            continue
        phi1 = rotor_current_phase(1, slip, params, omega_s)
        rows.append(
            PhaseRow(
                load_torque=tau,
                slip=slip,
                phi1_deg=math.degrees(phi1),
                status="ok",
            )
        )
    return tuple(rows)


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    return f"{value:.12g}"


def _write_table(rows, columns, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(columns) + "\n")
        for row in rows:
            fh.write(
                ",".join(_format_cell(getattr(row, col)) for col in columns)
                + "\n"
            )


def write_sweep_csv(rows, path) -> None:
    """Serialize sweep rows (UTF-8, LF, 12 significant digits)."""
    _write_table(rows, SWEEP_COLUMNS, path)


def write_max_mi_csv(rows, path) -> None:
    """Serialize feasibility-curve rows (UTF-8, LF, 12 significant digits)."""
    _write_table(rows, MAX_MI_COLUMNS, path)


def write_phase_csv(rows, path) -> None:
    """Serialize phase-curve rows (UTF-8, LF, 12 significant digits)."""
    _write_table(rows, PHASE_COLUMNS, path)
