"""Fourier analysis of the two-angle inverter pattern and angle solvers.

The pole voltage is quarter-wave symmetric: +V_dc/2 on [0, alpha1),
-V_dc/2 on [alpha1, alpha2), +V_dc/2 on [alpha2, pi/2].  Every odd
non-triplen harmonic then has amplitude

    V_n = (2*V_dc / (n*pi)) * (1 - 2*cos(n*alpha1) + 2*cos(n*alpha2))

and the solvers pick (alpha1, alpha2) so the fundamental meets a requested
modulation index while the 5th/7th pair is eliminated or driven to a
target ratio.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InfeasibleError, NoSolutionError, UnsupportedOrderError
from .phasors import MethodVariant

#: Load-independent V5/V7 target of the fixed-ratio strategy.  Under the
#: leakage-dominated approximation I_n ~ V_n/(n*w_s*(L_ls+L_lr)) the 5th and
#: 7th rotor currents are equal exactly at this ratio, cancelling the
#: current-difference term of the simplified torque estimate.
CLASSIC_VOLTAGE_RATIO = 5.0 / 7.0

DEFAULT_V_DC = 560.0
DEFAULT_OMEGA_S = 2.0 * math.pi * 50.0

_HALF_PI = 0.5 * math.pi
_RESIDUAL_TOL = 1e-10
_MAX_NEWTON_ITERATIONS = 100
_GRID_POINTS = 200
_DEDUPE_TOL = 1e-8


@dataclass(frozen=True)
class SwitchingPattern:
    """A two-angle quarter-wave switching pattern.

    Attributes:
        angles: The switching angles (alpha1, alpha2) in rad, with
            0 <= alpha1 <= alpha2 <= pi/2.  Equal angles are the degenerate
            zero-width notch, i.e. the square wave (MI = 1).
        v_dc: DC bus voltage (V), > 0.
        omega_s: Fundamental electrical angular frequency (rad/s), > 0.
    """

    angles: tuple[float, float]
    v_dc: float = DEFAULT_V_DC
    omega_s: float = DEFAULT_OMEGA_S

    def __post_init__(self):
        angles = tuple(float(a) for a in self.angles)
        if len(angles) != 2:
            raise ValueError(f"expected two switching angles, got {len(angles)}")
        object.__setattr__(self, "angles", angles)
        a1, a2 = angles
        if not (math.isfinite(a1) and math.isfinite(a2)):
            raise ValueError(f"angles must be finite, got {angles!r}")
        if not 0.0 <= a1 <= a2 <= _HALF_PI:
            raise ValueError(
                f"angles must satisfy 0 <= alpha1 <= alpha2 <= pi/2, got {angles!r}"
            )
        if not self.v_dc > 0.0:
            raise ValueError(f"v_dc must be positive, got {self.v_dc!r}")
        if not self.omega_s > 0.0:
            raise ValueError(f"omega_s must be positive, got {self.omega_s!r}")

    @property
    def alpha1(self) -> float:
        return self.angles[0]

    @property
    def alpha2(self) -> float:
        return self.angles[1]


@dataclass(frozen=True)
class SolveReport:
    """Outcome of one angle solve.

    Attributes:
        pattern: The selected switching pattern.
        residuals: Per-equation residual magnitudes (MI equation first),
            all below the convergence tolerance on success.
        iterations: Newton iterations spent on the selected root.
        branch: Which root was selected among all converged roots, as
            "i/n" ordered by increasing alpha1 (the largest is selected).
    """

    pattern: SwitchingPattern
    residuals: tuple[float, float]
    iterations: int
    branch: str


@dataclass(frozen=True)
class MaxMiResult:
    """Maximum modulation index over a constraint manifold.

    Attributes:
        mi_max: The located maximum of the modulation index.
        pattern: Angles achieving it.
    """

    mi_max: float
    pattern: SwitchingPattern


def _bracket(n, alpha1, alpha2):
    """The dimensionless amplitude factor 1 - 2cos(n*a1) + 2cos(n*a2)."""
    return 1.0 - 2.0 * np.cos(n * alpha1) + 2.0 * np.cos(n * alpha2)


def _check_supported_order(n: int) -> None:
    if not (isinstance(n, (int, np.integer)) and n >= 1):
        raise UnsupportedOrderError(f"harmonic order must be a positive integer, got {n!r}")
    if n % 2 == 0 or n % 3 == 0:
        raise UnsupportedOrderError(
            f"order {n} is absent from the balanced quarter-wave pattern "
            "(even and triplen harmonics carry no line-to-line content)"
        )


def fourier_amplitude(pattern: SwitchingPattern, n: int) -> float:
    """Amplitude V_n (V) of the odd non-triplen harmonic ``n``.

    Args:
        pattern: The switching pattern.
        n: Harmonic order in {1, 5, 7, 11, 13, ...}.

    Returns:
        The signed peak amplitude of the order-n sine component.
    """
    _check_supported_order(n)
    return (2.0 * pattern.v_dc / (n * math.pi)) * float(
        _bracket(n, pattern.alpha1, pattern.alpha2)
    )


def modulation_index(pattern: SwitchingPattern) -> float:
    """Fundamental amplitude normalized by 2*V_dc/pi."""
    return float(_bracket(1, pattern.alpha1, pattern.alpha2))


def _system_coefficients(
    variant: MethodVariant, ratio_target: float
) -> tuple[float, float, float]:
    """Cleared-denominator harmonic equation c5*b5 + c7*b7 = 0 and its scale.

    The V5/V7 = r constraint multiplies out to 7*b5 - 5*r*b7 = 0 (the n in
    2*V_dc/(n*pi) converts bracket ratios to voltage ratios); V7/V5 = r
    likewise becomes 5*b7 - 7*r*b5 = 0.  The scale normalizes residuals so
    the tolerance means the same thing for any ratio magnitude.
    """
    if variant is MethodVariant.SHE_PWM:
        return 1.0, 0.0, 1.0
    if variant is MethodVariant.RATIO_I:
        return 7.0, -5.0 * ratio_target, max(7.0, 5.0 * ratio_target)
    if variant is MethodVariant.RATIO_II:
        return -7.0 * ratio_target, 5.0, max(5.0, 7.0 * ratio_target)
    if variant is MethodVariant.CLASSIC:
        return 7.0, -5.0 * CLASSIC_VOLTAGE_RATIO, 7.0
    raise ValueError(f"unknown method variant {variant!r}")


def _system(mi_target, c5, c7, scale, a1, a2):
    f1 = _bracket(1, a1, a2) - mi_target
    f2 = (c5 * _bracket(5, a1, a2) + c7 * _bracket(7, a1, a2)) / scale
    return f1, f2


def _newton(mi_target, c5, c7, scale, a1, a2):
    """Damped Newton from one seed; returns (a1, a2, iterations) or None."""
    f1, f2 = _system(mi_target, c5, c7, scale, a1, a2)
    err = max(abs(f1), abs(f2))
    for iteration in range(1, _MAX_NEWTON_ITERATIONS + 1):
        if err < 1e-12:
            return a1, a2, iteration - 1
        j11 = 2.0 * math.sin(a1)
        j12 = -2.0 * math.sin(a2)
        j21 = (10.0 * c5 * math.sin(5.0 * a1) + 14.0 * c7 * math.sin(7.0 * a1)) / scale
        j22 = -(10.0 * c5 * math.sin(5.0 * a2) + 14.0 * c7 * math.sin(7.0 * a2)) / scale
        det = j11 * j22 - j12 * j21
        if abs(det) < 1e-14:
            return None
        da1 = -(f1 * j22 - f2 * j12) / det
        da2 = -(j11 * f2 - j21 * f1) / det
        step = 1.0
        for _ in range(30):
            n1 = min(max(a1 + step * da1, 0.0), _HALF_PI)
            n2 = min(max(a2 + step * da2, 0.0), _HALF_PI)
            g1, g2 = _system(mi_target, c5, c7, scale, n1, n2)
            new_err = max(abs(g1), abs(g2))
            if new_err < err or (n1 == a1 and n2 == a2):
                break
            step *= 0.5
        else:
            return None
        if n1 == a1 and n2 == a2:
            return None
        a1, a2, f1, f2, err = n1, n2, g1, g2, new_err
    return (a1, a2, _MAX_NEWTON_ITERATIONS) if err < 1e-12 else None


def _grid_seeds(mi_target, c5, c7, scale):
    """Centers of uniform-grid cells where both equations change sign."""
    nodes = np.linspace(0.0, _HALF_PI, _GRID_POINTS)
    a1g, a2g = np.meshgrid(nodes, nodes, indexing="ij")
    f1, f2 = _system(mi_target, c5, c7, scale, a1g, a2g)
    invalid = a2g < a1g
    f1 = np.where(invalid, np.nan, f1)
    f2 = np.where(invalid, np.nan, f2)

    def straddles(f):
        corners = np.stack(
            [f[:-1, :-1], f[1:, :-1], f[:-1, 1:], f[1:, 1:]]
        )
        finite = np.isfinite(corners).all(axis=0)
        # NaN corners propagate through min/max and fail the comparisons.
        return finite & (corners.min(axis=0) <= 0.0) & (corners.max(axis=0) >= 0.0)

    cells = np.argwhere(straddles(f1) & straddles(f2))
    half = 0.5 * (nodes[1] - nodes[0])
    return [(nodes[i] + half, nodes[j] + half) for i, j in cells]


def _reduction_seeds(mi_target, c5, c7, scale, samples=4001):
    """Seeds from the 1-D reduction along the MI constraint curve.

    On b1 = mi the first angle is an explicit function of the second:
    cos(alpha1) = (1 + 2*cos(alpha2) - mi)/2.  Scanning that curve finds
    every sign change of the harmonic equation, plus near-tangent minima
    that a coarse 2-D grid can miss.
    """
    a2 = np.linspace(0.0, _HALF_PI, samples)
    cos_a1 = 0.5 * (1.0 + 2.0 * np.cos(a2) - mi_target)
    valid = np.abs(cos_a1) <= 1.0
    a1 = np.full_like(a2, np.nan)
    a1[valid] = np.arccos(cos_a1[valid])
    valid &= a1 <= a2 + 1e-15
    _, h = _system(mi_target, c5, c7, scale, a1, a2)
    h = np.where(valid, h, np.nan)

    seeds = []
    sign_change = (h[:-1] * h[1:] <= 0.0) & np.isfinite(h[:-1]) & np.isfinite(h[1:])
    for idx in np.flatnonzero(sign_change):
        mid = 0.5 * (a2[idx] + a2[idx + 1])
        c = 0.5 * (1.0 + 2.0 * math.cos(mid) - mi_target)
        if abs(c) <= 1.0:
            seeds.append((math.acos(c), mid))
    # Near-tangent local minima of |h| (double roots produce no sign flip).
    absh = np.abs(h)
    interior = np.isfinite(absh[1:-1])
    local_min = interior & (absh[1:-1] <= absh[:-2]) & (absh[1:-1] <= absh[2:])
    for idx in np.flatnonzero(local_min & (absh[1:-1] < 1e-3)) + 1:
        seeds.append((float(a1[idx]), float(a2[idx])))
    return seeds


def _solve_system(
    mi_target, variant, ratio_target, v_dc, omega_s, description
) -> SolveReport:
    if not mi_target > 0.0:
        raise ValueError(f"mi_target must be positive, got {mi_target!r}")
    c5, c7, scale = _system_coefficients(variant, ratio_target)

    roots: list[tuple[float, float, int]] = []
    if mi_target <= 1.0:
        seeds = _reduction_seeds(mi_target, c5, c7, scale)
        seeds += _grid_seeds(mi_target, c5, c7, scale)
        for seed1, seed2 in seeds:
            result = _newton(mi_target, c5, c7, scale, seed1, seed2)
            if result is None:
                continue
            a1, a2, iterations = result
            if not -1e-12 <= a2 - a1 and a2 <= _HALF_PI + 1e-12:
                continue
            a1 = min(max(a1, 0.0), _HALF_PI)
            a2 = min(max(a2, a1), _HALF_PI)
            f1, f2 = _system(mi_target, c5, c7, scale, a1, a2)
            if max(abs(f1), abs(f2)) >= _RESIDUAL_TOL:
                continue
            if not any(
                abs(a1 - r1) < _DEDUPE_TOL and abs(a2 - r2) < _DEDUPE_TOL
                for r1, r2, _ in roots
            ):
                roots.append((a1, a2, iterations))

    if not roots:
        ceiling = max_mi(ratio_target, variant, v_dc=v_dc, omega_s=omega_s)
        raise InfeasibleError(
            f"no {description} solution at mi_target={mi_target!r}; "
            f"the feasible maximum is mi_max={ceiling.mi_max:.6f}",
            mi_target=mi_target,
            mi_max=ceiling.mi_max,
        )

    roots.sort(key=lambda root: (root[0], root[1]))
    a1, a2, iterations = roots[-1]
    f1, f2 = _system(mi_target, c5, c7, scale, a1, a2)
    return SolveReport(
        pattern=SwitchingPattern(angles=(a1, a2), v_dc=v_dc, omega_s=omega_s),
        residuals=(abs(f1), abs(f2)),
        iterations=iterations,
        branch=f"{len(roots)}/{len(roots)}",
    )


def solve_she_pwm(
    mi_target: float,
    *,
    v_dc: float = DEFAULT_V_DC,
    omega_s: float = DEFAULT_OMEGA_S,
) -> SolveReport:
    """Angles that meet ``mi_target`` with the 5th harmonic eliminated.

    Args:
        mi_target: Requested modulation index, 0 < mi <= feasible maximum.
        v_dc: DC bus voltage stamped on the returned pattern (V).
        omega_s: Fundamental frequency stamped on the pattern (rad/s).

    Returns:
        A :class:`SolveReport`; ``fourier_amplitude(report.pattern, 5)`` is
        zero to the residual tolerance.

    Raises:
        InfeasibleError: If no root exists; carries the feasible maximum.
    """
    return _solve_system(
        mi_target, MethodVariant.SHE_PWM, 0.0, v_dc, omega_s, "fifth-elimination"
    )


def solve_ratio(
    mi_target: float,
    ratio_target: float,
    variant: MethodVariant,
    *,
    v_dc: float = DEFAULT_V_DC,
    omega_s: float = DEFAULT_OMEGA_S,
) -> SolveReport:
    """Angles meeting ``mi_target`` with a targeted 5th/7th voltage ratio.

    Args:
        mi_target: Requested modulation index.
        ratio_target: V5/V7 for RATIO_I, V7/V5 for RATIO_II; >= 0.  The
            equations are solved in cleared-denominator form, so a zero
            ratio degenerates to eliminating the numerator harmonic.
        variant: RATIO_I or RATIO_II.
        v_dc: DC bus voltage stamped on the returned pattern (V).
        omega_s: Fundamental frequency stamped on the pattern (rad/s).

    Returns:
        A :class:`SolveReport`; when several roots converge the one with
        the largest alpha1 is selected deterministically.

    Raises:
        InfeasibleError: If the (mi, ratio) pair lies outside the feasible
            region; carries the feasible maximum for this ratio.
    """
    if variant not in (MethodVariant.RATIO_I, MethodVariant.RATIO_II):
        raise ValueError(f"variant must be RATIO_I or RATIO_II, got {variant!r}")
    if ratio_target < 0.0:
        raise ValueError(f"ratio_target must be >= 0, got {ratio_target!r}")
    return _solve_system(
        mi_target, variant, ratio_target, v_dc, omega_s, f"{variant.value} ratio"
    )


def classic_angles(
    mi_target: float,
    *,
    ratio: float = CLASSIC_VOLTAGE_RATIO,
    v_dc: float = DEFAULT_V_DC,
    omega_s: float = DEFAULT_OMEGA_S,
) -> SolveReport:
    """Angles for the fixed, load-independent V5/V7 ratio.

    Args:
        mi_target: Requested modulation index.
        ratio: The fixed V5/V7 target; defaults to
            :data:`CLASSIC_VOLTAGE_RATIO` and is exposed as a knob so the
            fixed-ratio strategy can be re-targeted without touching the
            solver.
        v_dc: DC bus voltage stamped on the returned pattern (V).
        omega_s: Fundamental frequency stamped on the pattern (rad/s).
    """
    if ratio < 0.0:
        raise ValueError(f"ratio must be >= 0, got {ratio!r}")
    return _solve_system(
        mi_target, MethodVariant.RATIO_I, ratio, v_dc, omega_s, "fixed-ratio"
    )


def max_mi(
    ratio_target: float,
    variant: MethodVariant,
    *,
    v_dc: float = DEFAULT_V_DC,
    omega_s: float = DEFAULT_OMEGA_S,
    alpha1_samples: int = 801,
    span_samples: int = 1001,
) -> MaxMiResult:
    """Maximum modulation index on a constraint manifold.

    Scans the harmonic-constraint manifold: for each alpha1 on a uniform
    grid, every root of the cleared-denominator equation along alpha2 in
    (alpha1, pi/2] is located by sign-scan plus bisection, and the largest
    resulting modulation index is returned with its angles.  When the
    requested ratio equals the square-wave ratio the supremum MI = 1 sits
    on the degenerate alpha1 = alpha2 edge and is returned exactly.

    Args:
        ratio_target: Target ratio (V5/V7 for RATIO_I, V7/V5 for RATIO_II);
            ignored for SHE_PWM and CLASSIC.
        variant: Which constraint defines the manifold.
        v_dc: DC bus voltage stamped on the returned pattern (V).
        omega_s: Fundamental frequency stamped on the pattern (rad/s).
        alpha1_samples: Grid resolution along alpha1.
        span_samples: Scan resolution along the alpha2 span per alpha1.

    Returns:
        A :class:`MaxMiResult` with the located maximum and its angles.

    Raises:
        NoSolutionError: If the constraint manifold is empty.
    """
    if ratio_target < 0.0:
        raise ValueError(f"ratio_target must be >= 0, got {ratio_target!r}")
    c5, c7, _ = _system_coefficients(variant, ratio_target)

    if abs(c5 + c7) < 1e-13:
        # Square-wave degeneracy: all brackets equal 1 on alpha1 = alpha2,
        # so the whole edge satisfies the constraint with MI = 1.
        return MaxMiResult(
            mi_max=1.0,
            pattern=SwitchingPattern(angles=(0.0, 0.0), v_dc=v_dc, omega_s=omega_s),
        )

    alpha1 = np.linspace(0.0, _HALF_PI, alpha1_samples)[:, None]
    fractions = np.linspace(1e-12, 1.0, span_samples)[None, :]
    span = _HALF_PI - alpha1
    alpha2 = alpha1 + fractions * span
    g = c5 * _bracket(5, alpha1, alpha2) + c7 * _bracket(7, alpha1, alpha2)

    crossing = g[:, :-1] * g[:, 1:] <= 0.0
    rows, cols = np.nonzero(crossing)
    if rows.size == 0:
        raise NoSolutionError(
            f"the {variant.value} constraint manifold is empty for "
            f"ratio_target={ratio_target!r}"
        )

    a1 = alpha1[rows, 0]
    lo = alpha2[rows, cols]
    hi = alpha2[rows, cols + 1]
    g_lo = g[rows, cols]
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        g_mid = c5 * _bracket(5, a1, mid) + c7 * _bracket(7, a1, mid)
        take_low = g_lo * g_mid <= 0.0
        hi = np.where(take_low, mid, hi)
        lo = np.where(take_low, lo, mid)
        g_lo = np.where(take_low, g_lo, g_mid)
    a2 = 0.5 * (lo + hi)

    mi = _bracket(1, a1, a2)
    best = int(np.argmax(mi))
    best_a1 = float(a1[best])
    best_a2 = float(min(max(a2[best], best_a1), _HALF_PI))
    return MaxMiResult(
        mi_max=float(mi[best]),
        pattern=SwitchingPattern(
            angles=(best_a1, best_a2), v_dc=v_dc, omega_s=omega_s
        ),
    )
