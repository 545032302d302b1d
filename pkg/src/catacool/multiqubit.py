"""Economics of cooling many identical qubits.

Compares two strategies for a register of N qubits at common excited
population p2, of which Nc are designated cold: many-body cooling (MBC,
one joint unitary on k hot qubits per cold qubit) versus catalytic cooling
(CC, repeated qubit-pair loops with a rank-2 catalyst).  All quantities are
closed forms; the k-qubit cooling sum is cross-checked elsewhere against an
explicit joint-space oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from .errors import InvalidInputError

EPS = 1e-12


def _check_p2(p2: float) -> None:
    if not 0.0 <= p2 <= 0.5:
        raise InvalidInputError("need 0 <= p2 <= 1/2")


def k_qubit_delta_p1c(k: int, p2: float) -> float:
    """Ground-population gain when k hot qubits optimally cool one qubit.

    Sums binom(k, l) * (p1^{k-l} p2^{l+1} - p1^{l+1} p2^{k-l}) over the
    profitable excitation numbers l; the top term of the odd-k range is
    identically zero and excluded.
    """
    if k < 2:
        raise InvalidInputError("need at least two hot qubits")
    _check_p2(p2)
    p1 = 1.0 - p2
    lmax = k // 2 - 1 if k % 2 == 0 else (k - 3) // 2
    total = 0.0
    for l in range(lmax + 1):
        j = p1 ** (k - l) * p2 ** (l + 1) - p1 ** (l + 1) * p2 ** (k - l)
        total += math.comb(k, l) * j
    return total


def cooling_coefficient(k: int, p2: float) -> float:
    """Heat extracted per hot qubit, xi^(k) = Delta p_1^c / k."""
    return k_qubit_delta_p1c(k, p2) / k


def xi2(p2: float) -> float:
    """Closed form of the two-qubit coefficient, (1 - 2 p2)/2 * p1 p2."""
    _check_p2(p2)
    return (1.0 - 2.0 * p2) / 2.0 * (1.0 - p2) * p2


@dataclass(frozen=True)
class ConjectureReport:
    table: Dict[int, Tuple[float, ...]]
    p2_grid: Tuple[float, ...]
    holds: bool


def verify_coefficient_conjecture(
    k_max: int, p2_grid: Sequence[float]
) -> ConjectureReport:
    """Tabulate xi^(k) on a p2 grid and test xi^(k) <= xi^(2) throughout."""
    if k_max < 2:
        raise InvalidInputError("k_max must be at least 2")
    grid = tuple(float(p) for p in p2_grid)
    table: Dict[int, Tuple[float, ...]] = {
        k: tuple(cooling_coefficient(k, p) for p in grid) for k in range(2, k_max + 1)
    }
    ref = table[2]
    holds = all(
        x <= r + EPS for k in range(3, k_max + 1) for x, r in zip(table[k], ref)
    )
    return ConjectureReport(table, grid, holds)


@dataclass(frozen=True)
class QubitEnsembleParams:
    N: int
    Nc: int
    p2: float

    def __post_init__(self):
        if self.N < 2 or not 1 <= self.Nc <= self.N - 1:
            raise InvalidInputError("need N >= 2 and 1 <= Nc <= N-1")
        _check_p2(self.p2)

    @property
    def Nh(self) -> int:
        return self.N - self.Nc


def cc_cycle_heat(p2: float) -> float:
    """Heat extracted per CC cycle, (1 - 2 p2)/(1 + 2 p1 p2) * p1 p2."""
    _check_p2(p2)
    p1 = 1.0 - p2
    return (1.0 - 2.0 * p2) / (1.0 + 2.0 * p1 * p2) * p1 * p2


def q_cc(params: QubitEnsembleParams) -> float:
    """Total CC heat: min(Nc, Nh) cycles at the per-cycle closed form."""
    n_cycles = min(params.Nc, params.Nh)
    return n_cycles * cc_cycle_heat(params.p2)


@dataclass(frozen=True)
class MbcBounds:
    lower: float
    upper: float
    exact: bool
    boundary: bool  # N not divisible by 3 and Nc adjacent to N/3


def q_mbc_bounds(params: QubitEnsembleParams) -> MbcBounds:
    """Best many-body heat: exact for Nc >= N/3, an interval below."""
    xi = xi2(params.p2)
    exact = 3 * params.Nc >= params.N
    boundary = params.N % 3 != 0 and abs(3 * params.Nc - params.N) < 3
    if exact:
        value = xi * params.Nh
        return MbcBounds(value, value, True, boundary)
    return MbcBounds(2.0 * xi * params.Nc, xi * params.Nh, False, boundary)


@dataclass(frozen=True)
class GammaResult:
    regime: str
    value: Optional[float]  # exact gamma when available
    upper_bound: float
    exact: bool


def performance_ratio(params: QubitEnsembleParams) -> GammaResult:
    """gamma = Q_CC / max Q_MBC, exact above Nc = N/3, bounded below it."""
    p1 = 1.0 - params.p2
    base = 1.0 / (1.0 + 2.0 * p1 * params.p2)
    if 3 * params.Nc < params.N:
        return GammaResult("Nc<N/3", None, base, False)
    if 2 * params.Nc <= params.N:
        g = 2.0 * base * params.Nc / params.Nh
        return GammaResult("N/3<=Nc<=N/2", g, g, True)
    g = 2.0 * base
    return GammaResult("Nc>N/2", g, g, True)


def gamma_continuous(nc_over_n: float, p2: float) -> Tuple[float, bool]:
    """Real-valued gamma curve used for sweeps: (value-or-upper-bound, exact).

    Below Nc/N = 1/3 only the upper bound is known; the flag is False there.
    """
    if not 0.0 < nc_over_n < 1.0:
        raise InvalidInputError("need 0 < Nc/N < 1")
    _check_p2(p2)
    p1 = 1.0 - p2
    base = 1.0 / (1.0 + 2.0 * p1 * p2)
    nu = nc_over_n
    if 3.0 * nu < 1.0:
        return base, False
    if 2.0 * nu <= 1.0:
        return 2.0 * base * nu / (1.0 - nu), True
    return 2.0 * base, True


def cc_advantage_threshold(p2: float) -> float:
    """Nc/N above which gamma > 1, (1 + 2 p1 p2)/(3 + 2 p1 p2)."""
    _check_p2(p2)
    p1 = 1.0 - p2
    return (1.0 + 2.0 * p1 * p2) / (3.0 + 2.0 * p1 * p2)


@dataclass(frozen=True)
class OptimalNcReport:
    max_q_cc: float
    argmax_nc: float
    threshold_nc_over_n: float
    ratio_vs_best_mbc: float


def optimal_nc_comparison(N: int, p2: float) -> OptimalNcReport:
    """Best CC operating point and its edge over the best exact-regime MBC."""
    if N < 2:
        raise InvalidInputError("need N >= 2")
    _check_p2(p2)
    p1 = 1.0 - p2
    max_q = (N / 2.0) * cc_cycle_heat(p2)
    threshold = 2.0 * p1 * p2 / (1.0 + 2.0 * p1 * p2)
    ratio = 1.5 / (1.0 + 2.0 * p1 * p2)
    return OptimalNcReport(max_q, N / 2.0, threshold, ratio)
