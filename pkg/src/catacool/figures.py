"""Sweep generators emitting the CSV tables behind the plotted figures.

Each generator returns (header, rows) with plain Python values; rows are
rendered to text through :func:`rows_to_csv`, which fixes the numeric
format (12 significant digits) so identical inputs always produce
byte-identical output.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence, Tuple

import numpy as np

from .cnu import fmt
from .cooling_opt import (
    catalytic_enhancement_degenerate3,
    optimal_enhancement_p1v,
    optimal_qubit_catalyst,
)
from .multiqubit import cooling_coefficient, gamma_continuous
from .states import DiagonalState, EnergyLevels
from .thermometry import (
    ThermometrySetup,
    cramer_rao_bound,
    probe_after_optimal_swap,
    sensitivity_after_catalytic,
)

Row = Tuple[object, ...]
Table = Tuple[Tuple[str, ...], List[Row]]


def format_value(v: object) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return fmt(float(v))
    return str(v)


def rows_to_csv(header: Sequence[str], rows: Iterable[Row]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(format_value(v) for v in row))
    return "\n".join(lines) + "\n"


def qubit_catalyst_sweep(
    p2h_values: Sequence[float],
    p2c_fractions: Sequence[float],
    n_values: Sequence[int],
) -> Table:
    """Optimal qubit-qubit cooling over a (p2c, p2h, n) grid.

    p2c runs over the given fractions of each p2h so the p2c <= p2h
    precondition holds across the whole grid.
    """
    header = ("p2c", "p2h", "n", "J_cool_max", "p1c_final", "in_cooling_region")
    rows: List[Row] = []
    for p2h in p2h_values:
        for frac in p2c_fractions:
            p2c = frac * p2h
            for n in n_values:
                sol = optimal_qubit_catalyst(p2c, p2h, n)
                p1c_final = (1.0 - p2c) + max(sol.j_cool_max, 0.0)
                rows.append((p2c, p2h, n, sol.j_cool_max, p1c_final, sol.region))
    return header, rows


def enhancement_vs_cold_sweep(x_hot: float = 0.01, points: int = 100) -> Table:
    """Final ground populations versus the cold Boltzmann factor.

    The hot object is the degenerate three-level system at fixed
    x_hot = exp(-beta_h * eps3); the sweep variable is
    exp(-beta_c * eps2), starting at the regime boundary x_c = x_hot.
    """
    header = ("exp_neg_beta_c_eps", "p1c_initial", "p1c_hot_only", "p1c_catalytic")
    rows: List[Row] = []
    for x_c in np.linspace(x_hot, 0.99, points):
        p2c = x_c / (1.0 + x_c)
        res = catalytic_enhancement_degenerate3(
            p2c, x_hot, optimal_enhancement_p1v(p2c, x_hot)
        )
        p1c = 1.0 - p2c
        rows.append((x_c, p1c, p1c + max(res.j_cool, 0.0), res.final_p1c))
    return header, rows


def enhancement_vs_hot_sweep(x_cold: float, points: int = 100) -> Table:
    """Cooling currents versus the hot Boltzmann factor at fixed cold state.

    Sweeps x = exp(-beta_h * eps3) up to the boundary x = p2c/p1c where the
    catalyst-free current vanishes but the catalytic increment does not.
    """
    header = ("exp_neg_beta_h_eps3", "J_cool", "J_total")
    if not 0.0 < x_cold < 1.0:
        raise ValueError("need 0 < x_cold < 1")
    p2c = x_cold / (1.0 + x_cold)
    rows: List[Row] = []
    for x in np.linspace(x_cold / points, x_cold, points):
        res = catalytic_enhancement_degenerate3(
            p2c, float(x), optimal_enhancement_p1v(p2c, float(x))
        )
        rows.append((float(x), res.j_cool, res.j_cool + res.jp_cool))
    return header, rows


def coefficient_sweep(k_max: int = 14, points: int = 100) -> Table:
    """Per-hot-qubit cooling coefficient xi^(k) over a p2 grid, one curve per k."""
    header = ("p2", "k", "xi")
    rows: List[Row] = []
    for k in range(2, k_max + 1):
        for p2 in np.linspace(0.0, 0.5, points):
            rows.append((float(p2), k, cooling_coefficient(k, float(p2))))
    return header, rows


def gamma_sweep(points: int = 100) -> Table:
    """Performance ratio gamma versus Nc/N at the two temperature extremes."""
    header = ("Nc_over_N", "beta_label", "gamma_or_bound", "is_exact")
    rows: List[Row] = []
    for label, p2 in (("beta->0", 0.5), ("beta->inf", 0.0)):
        for nu in np.linspace(0.01, 0.99, points):
            value, exact = gamma_continuous(float(nu), p2)
            rows.append((float(nu), label, value, exact))
    return header, rows


def thermometry_sweep(
    probe_ratio: float, points: int = 200, eps3: float = 1.0
) -> Table:
    """Estimation errors versus x = exp(-beta*eps3) for a fixed probe ratio."""
    header = ("x", "sigma_prime", "sigma_double_prime", "cramer_rao", "in_optimal_regime")
    if not 0.0 < probe_ratio < 1.0:
        raise ValueError("need 0 < p2/p1 < 1")
    p1 = 1.0 / (1.0 + probe_ratio)
    probe = DiagonalState((p1, 1.0 - p1))
    levels = EnergyLevels((0.0, 0.0, eps3))
    rows: List[Row] = []
    for x in np.logspace(-4.0, 0.0, points):
        beta = -float(np.log(x)) / eps3
        setup = ThermometrySetup(probe, levels, beta)
        prime = probe_after_optimal_swap(setup)
        double = sensitivity_after_catalytic(setup)
        rows.append(
            (
                float(x),
                prime.sigma,
                double.sigma,
                cramer_rao_bound(levels, beta),
                prime.in_optimal_regime,
            )
        )
    return header, rows
