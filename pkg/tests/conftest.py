"""Shared fixtures: the 3 kW test machine and common operating constants."""

import math

import pytest

from she_torque.motor import MotorParameters

# 3 kW, 4-pole, 50 Hz cage machine used throughout the test suite.
MOTOR_3KW = MotorParameters(
    r_s=1.85,
    r_r=1.84,
    l_ls=0.010,
    l_lr=0.010,
    l_m=0.160,
    pole_pairs=2,
    inertia=0.007,
)

OMEGA_50HZ = 2.0 * math.pi * 50.0
V_DC = 560.0
RATED_SPEED_RPM = 1415.0
RATED_SLIP = (1500.0 - RATED_SPEED_RPM) / 1500.0  # 85/1500


@pytest.fixture
def motor() -> MotorParameters:
    return MOTOR_3KW


@pytest.fixture
def omega_s() -> float:
    return OMEGA_50HZ
