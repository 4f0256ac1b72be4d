"""Two-angle selective-harmonic-elimination patterns for induction-motor
drives, targeted at minimising the 6th harmonic of the electromagnetic
torque, with an independent time-domain drive simulation for verification.
"""

from .errors import (
    ConfigError,
    EmptyResultError,
    InfeasibleError,
    InstabilityError,
    InvalidFrequencyError,
    InvalidOrderError,
    NoMinimizingRatioError,
    NoSolutionError,
    SheTorqueError,
    SingularSlipError,
    SpectralLeakageError,
    TransientError,
    UndefinedRatioError,
    UnstableRegionError,
    UnsupportedOrderError,
)
from .angles import (
    CLASSIC_VOLTAGE_RATIO,
    MaxMiResult,
    SolveReport,
    SwitchingPattern,
    classic_angles,
    fourier_amplitude,
    max_mi,
    modulation_index,
    solve_ratio,
    solve_she_pwm,
)
from .motor import (
    HarmonicSolution,
    MotorParameters,
    OperatingPoint,
    breakdown_slip,
    equilibrium_slip,
    fundamental_slip,
    harmonic_circuit_solve,
    harmonic_slip,
    load_motor_json,
    motor_from_dict,
    rotor_current_phase,
    steady_state_torque,
)
from .phasors import (
    MethodVariant,
    TorquePhasor,
    combine_torque,
    delta_theta_estimate,
    min_ratio,
    phasor_sum,
    target_voltage_ratio,
    torque_amplitude_ratio,
    torque_component_phasors,
    torque_estimate_simplified,
)

from .simulator import (
    CHANNEL_NAMES,
    DEFAULT_DECIMATION,
    DEFAULT_STEPS_PER_PERIOD,
    MIN_STEPS_PER_PERIOD,
    LoadSpec,
    TimeSeries,
    harmonic_extract,
    simulate,
    simulate_sine_drive,
    synthesize_waveform,
)

from .sweep import (
    ALL_METHODS,
    CONDITIONS,
    DEFAULT_LOAD_COEFFICIENT,
    MAX_MI_COLUMNS,
    PHASE_COLUMNS,
    SWEEP_COLUMNS,
    ExperimentConfig,
    MaxMiRow,
    PhaseRow,
    SweepRow,
    method_ratio_target,
    predict_sixth_harmonic,
    run_max_mi_curve,
    run_phase_sweep,
    run_sweep,
    write_max_mi_csv,
    write_phase_csv,
    write_sweep_csv,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
