"""Single-qubit thermometry with a degenerate three-level environment.

The probe is a qubit with known populations (p1 > p2); the environment is
thermal over levels (0, 0, eps3) at the unknown inverse temperature beta.
Estimation error in beta units is sigma = sqrt(p1 p2') / |d p1' / d beta|
for the measured ground population p1'.  A catalytic step on top of the
optimal probe-environment swap strictly increases the sensitivity whenever
the catalyst is not fully mixed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .cooling_opt import optimal_enhancement_p1v
from .errors import InvalidInputError
from .states import EPS, DiagonalState, EnergyLevels, thermal_state


def _validate_env(levels: EnergyLevels) -> float:
    if levels.dim != 3 or levels[0] != 0.0 or levels[1] != 0.0 or levels[2] <= 0.0:
        raise InvalidInputError("environment levels must be (0, 0, eps3) with eps3 > 0")
    return levels[2]


def env_probs(levels: EnergyLevels, beta: float) -> np.ndarray:
    return thermal_state(levels, beta).as_array()


def env_lambdas(levels: EnergyLevels, beta: float) -> np.ndarray:
    """Population sensitivities lambda_j = d p_j / d beta = p_j (<H> - e_j)."""
    _validate_env(levels)
    p = env_probs(levels, beta)
    e = np.asarray(levels.energies)
    mean = float(np.dot(p, e))
    return p * (mean - e)


@dataclass(frozen=True)
class ThermometrySetup:
    probe: DiagonalState
    env_levels: EnergyLevels
    beta: float
    catalyst: Optional[DiagonalState] = None

    def __post_init__(self):
        if self.probe.dim != 2 or self.probe[0] <= self.probe[1]:
            raise InvalidInputError("probe must be a qubit with p1 > p2")
        _validate_env(self.env_levels)
        if not self.beta >= 0:
            raise InvalidInputError("beta must be non-negative")
        if self.catalyst is not None and self.catalyst.dim != 2:
            raise InvalidInputError("catalyst must be a qubit")


@dataclass(frozen=True)
class SensitivityRecord:
    p1_final: float
    dp1_dbeta: float
    sigma: float
    in_optimal_regime: bool
    optimal_p1v: Optional[float] = None
    catalyst_matches: Optional[bool] = None
    enhances: Optional[bool] = None


def _sigma(p1: float, dp1: float) -> float:
    if abs(dp1) < 1e-300:
        return math.inf
    return math.sqrt(max(p1 * (1.0 - p1), 0.0)) / abs(dp1)


def _in_regime(setup: ThermometrySetup) -> bool:
    x = math.exp(-setup.beta * setup.env_levels[2])
    return x <= setup.probe[1] / setup.probe[0] + EPS


def p1_after_swap(probe_p1: float, levels: EnergyLevels, beta: float) -> float:
    """Ground population after the swap |1_P 3_e> <-> |2_P 1_e|."""
    p = env_probs(levels, beta)
    p2 = 1.0 - probe_p1
    return probe_p1 * (1.0 - p[2]) + p2 * p[0]


def probe_after_optimal_swap(setup: ThermometrySetup) -> SensitivityRecord:
    """Sensitivity of the probe after the optimal probe-environment swap."""
    lam = env_lambdas(setup.env_levels, setup.beta)
    p1, p2 = setup.probe[0], setup.probe[1]
    p1f = p1_after_swap(p1, setup.env_levels, setup.beta)
    dp1 = p1 * (lam[0] + lam[1]) + p2 * lam[0]
    return SensitivityRecord(p1f, float(dp1), _sigma(p1f, dp1), _in_regime(setup))


def _catalyst_p1v(setup: ThermometrySetup) -> Tuple[float, float, bool]:
    """Supplied or optimal catalyst ground population, plus a match flag."""
    x = math.exp(-setup.beta * setup.env_levels[2])
    opt = optimal_enhancement_p1v(setup.probe[1], x)
    if setup.catalyst is None:
        return opt, opt, True
    supplied = setup.catalyst[0]
    return supplied, opt, abs(supplied - opt) <= 1e-12


def p1_after_catalytic(
    probe_p1: float, levels: EnergyLevels, beta: float, p1v: float
) -> float:
    """Ground population after the swap plus the catalytic loop increment."""
    p = env_probs(levels, beta)
    p2 = 1.0 - probe_p1
    return p1_after_swap(probe_p1, levels, beta) + p2 * (p[1] * p1v - p[0] * (1.0 - p1v))


def sensitivity_after_catalytic(setup: ThermometrySetup) -> SensitivityRecord:
    """Sensitivity after adding the qubit-catalyst enhancement loop.

    The enhancement unitary is fixed (full swaps), so the derivative treats
    the catalyst populations as beta-independent constants.
    """
    lam = env_lambdas(setup.env_levels, setup.beta)
    p1, p2 = setup.probe[0], setup.probe[1]
    p1v, opt, matches = _catalyst_p1v(setup)
    p2v = 1.0 - p1v
    base = probe_after_optimal_swap(setup)
    p1f = p1_after_catalytic(p1, setup.env_levels, setup.beta, p1v)
    dp1 = base.dp1_dbeta + p2 * (p1v * lam[1] - p2v * lam[0])
    enhances = lam[1] > 0.0 and p1v * lam[1] > p2v * lam[0] + 0.0
    return SensitivityRecord(
        float(p1f),
        float(dp1),
        _sigma(p1f, dp1),
        base.in_optimal_regime,
        optimal_p1v=opt,
        catalyst_matches=matches,
        enhances=enhances,
    )


def sigma_in_temperature_units(sigma_beta: float, beta: float) -> float:
    """Convert an inverse-temperature error to temperature units: T^2 * sigma."""
    if beta <= 0.0:
        return math.inf
    return sigma_beta / beta**2


def cramer_rao_bound(levels: EnergyLevels, beta: float) -> float:
    """1/sqrt(F_beta) with F_beta the environment's energy variance."""
    _validate_env(levels)
    p = env_probs(levels, beta)
    e = np.asarray(levels.energies)
    f = float(np.dot(p, e**2) - np.dot(p, e) ** 2)
    if f <= 0.0:
        return math.inf
    return 1.0 / math.sqrt(f)
