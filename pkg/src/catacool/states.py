"""Diagonal states, thermal states, majorization, and passivity tests.

All states are probability vectors sorted in non-increasing order; index 0
internally corresponds to the user-facing label "1" (the ground level when
energies are attached).  Strict inequalities are decided as
``left - right > EPS`` with ``EPS = 1e-12``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from .errors import InvalidInputError

# Tolerance for strict inequalities and normalization checks.
EPS = 1e-12

INF_BETA = math.inf


def _as_tuple(values: Iterable[float]) -> Tuple[float, ...]:
    return tuple(float(v) for v in values)


@dataclass(frozen=True)
class EnergyLevels:
    """Non-decreasing, finite energy eigenvalues (dimensionless units)."""

    energies: Tuple[float, ...]

    def __init__(self, energies: Sequence[float]):
        energies = _as_tuple(energies)
        if len(energies) < 2:
            raise InvalidInputError("need at least two energy levels")
        if not all(math.isfinite(e) for e in energies):
            raise InvalidInputError("energies must be finite")
        if any(energies[i] > energies[i + 1] for i in range(len(energies) - 1)):
            raise InvalidInputError("energies must be non-decreasing")
        object.__setattr__(self, "energies", energies)

    @property
    def dim(self) -> int:
        return len(self.energies)

    def __iter__(self):
        return iter(self.energies)

    def __len__(self) -> int:
        return len(self.energies)

    def __getitem__(self, k: int) -> float:
        return self.energies[k]


@dataclass(frozen=True)
class DiagonalState:
    """Sorted (non-increasing) probability vector, optionally with energies."""

    probs: Tuple[float, ...]
    levels: Optional[EnergyLevels] = field(default=None)

    def __init__(self, probs: Sequence[float], levels: Optional[EnergyLevels] = None):
        probs = _as_tuple(probs)
        if len(probs) < 1:
            raise InvalidInputError("empty probability vector")
        if not all(math.isfinite(p) for p in probs):
            raise InvalidInputError("probabilities must be finite")
        if any(p < -EPS or p > 1 + EPS for p in probs):
            raise InvalidInputError("probabilities must lie in [0, 1]")
        if abs(sum(probs) - 1.0) > 1e-9:
            raise InvalidInputError("probabilities must sum to 1")
        if any(probs[i] + EPS < probs[i + 1] for i in range(len(probs) - 1)):
            raise InvalidInputError("probabilities must be non-increasing")
        if levels is not None and levels.dim != len(probs):
            raise InvalidInputError("levels/probs dimension mismatch")
        object.__setattr__(self, "probs", probs)
        object.__setattr__(self, "levels", levels)

    @property
    def dim(self) -> int:
        return len(self.probs)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.probs, dtype=float)

    def __getitem__(self, k: int) -> float:
        return self.probs[k]

    def __iter__(self):
        return iter(self.probs)

    def __len__(self) -> int:
        return len(self.probs)


def thermal_state(levels: EnergyLevels, beta: float) -> DiagonalState:
    """Gibbs state e^{-beta e_k} / Z over the given levels.

    ``beta = math.inf`` puts all weight uniformly on the (possibly
    degenerate) ground set; ``beta = 0`` is the uniform state.
    """
    if isinstance(beta, bool) or not (beta >= 0):
        raise InvalidInputError("beta must be a non-negative real or +inf")
    e = np.asarray(levels.energies, dtype=float)
    if math.isinf(beta):
        ground = np.isclose(e, e.min(), rtol=0.0, atol=0.0)
        w = ground.astype(float)
    else:
        # Shift by the minimum for overflow-free exponentials.
        w = np.exp(-beta * (e - e.min()))
    p = w / w.sum()
    return DiagonalState(tuple(p), levels)


def majorizes(r: DiagonalState, q: DiagonalState) -> bool:
    """True iff every descending prefix sum of r dominates that of q."""
    if r.dim != q.dim:
        raise InvalidInputError("majorization needs equal dimensions")
    rs = np.sort(r.as_array())[::-1]
    qs = np.sort(q.as_array())[::-1]
    return bool(np.all(np.cumsum(rs) >= np.cumsum(qs) - EPS))


def is_passive_wrt_cold(pc: Sequence[float], ph: Sequence[float]) -> bool:
    """No joint unitary can lower the cold mean energy.

    Holds iff ``pc[i]/pc[i+1] >= ph[0]/ph[-1]`` for every adjacent cold pair,
    evaluated as a cross-product comparison so zero probabilities are safe.
    Accepts DiagonalState or any sorted probability sequence.
    """
    lo = ph[len(ph) - 1]
    hi = ph[0]
    for i in range(len(pc) - 1):
        if pc[i] * lo + EPS < pc[i + 1] * hi:
            return False
    return True


def joint_passive_wrt_cold(sector_values: Sequence[Sequence[float]]) -> bool:
    """Passivity of a cold-diagonal joint state given per-cold-level values.

    ``sector_values[i]`` lists the joint eigenvalues living in cold level i
    (energy order).  Passive iff min(sector i) >= max(sector i+1) for all i.
    """
    mins = [min(s) for s in sector_values]
    maxs = [max(s) for s in sector_values]
    return all(mins[i] + EPS >= maxs[i + 1] for i in range(len(sector_values) - 1))


def entropy(p: DiagonalState) -> float:
    """Shannon/von Neumann entropy -sum p ln p with 0 ln 0 = 0."""
    arr = p.as_array()
    nz = arr[arr > 0.0]
    return float(-np.sum(nz * np.log(nz)))


def mean_energy(p: DiagonalState) -> float:
    if p.levels is None:
        raise InvalidInputError("state carries no energy levels")
    return float(np.dot(p.as_array(), np.asarray(p.levels.energies)))
