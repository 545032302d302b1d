"""Acceptance gate: one test per primary criterion, each printing a
PASS line with the quantity it checked."""

import math
import time

import numpy as np
import pytest

from catacool import (
    DiagonalState,
    JointState,
    build_plan,
    catalytic_enhancement_degenerate3,
    cc_advantage_threshold,
    check_cnu1,
    cooling_coefficient,
    execute_plan,
    joint_passive_wrt_cold,
    optimal_enhancement_p1v,
    optimal_hot_only_cooling,
    optimal_nc_comparison,
    optimal_qubit_catalyst,
    performance_ratio,
    probe_after_optimal_swap,
    QubitEnsembleParams,
    sensitivity_after_catalytic,
    simulate_enhancement_degenerate3,
    synthesize_catalyst,
    general_enhancement,
    thermometry,
    verify_coefficient_conjecture,
    xi2,
)
from catacool.cooling_opt import general_enhancement_applicable
from catacool.oracles import (
    best_hot_only_delta,
    cnu1_exists_bruteforce,
    max_loop_current_lp,
)
from catacool.states import EPS, EnergyLevels
from catacool.thermometry import (
    ThermometrySetup,
    cramer_rao_bound,
    env_probs,
    p1_after_catalytic,
    p1_after_swap,
)


def _random_sorted(rng, d):
    arr = np.sort(rng.dirichlet(np.ones(d)))[::-1]
    return DiagonalState(tuple(arr))


def test_qubit_optimum_matches_numeric_maximization():
    """Closed-form max cooling current vs LP over catalyst spectra, < 60 s."""
    start = time.monotonic()
    p2h_grid = np.linspace(0.025, 0.475, 20)
    frac_grid = np.linspace(0.05, 1.0, 20)
    worst = 0.0
    for n in (2, 3, 4, 5):
        for p2h in p2h_grid:
            for frac in frac_grid:
                p2c = float(frac * p2h)
                closed = optimal_qubit_catalyst(p2c, float(p2h), n).j_cool_max
                lp = max_loop_current_lp(p2c, float(p2h), n)
                worst = max(worst, abs(closed - lp))
                assert abs(closed - lp) <= 1e-6
    elapsed = time.monotonic() - start
    assert elapsed < 60.0
    print(f"PASS: qubit optimum vs LP on 4x20x20 grid, worst gap {worst:.2e}, {elapsed:.1f}s")


def test_fig6_structural_claims():
    """Rank preferences and monotone widening of cooling regions."""
    # At p2c = p2h the best rank is 2 or 3.
    for p2 in np.linspace(0.05, 0.45, 9):
        js = {n: optimal_qubit_catalyst(float(p2), float(p2), n).j_cool_max for n in range(2, 11)}
        assert max(js, key=js.get) in (2, 3)
    # For p2c < p2h rank 3 never loses to rank 2.
    grid = [(f * h, h) for h in np.linspace(0.05, 0.45, 9) for f in np.linspace(0.1, 0.9, 9)]
    for p2c, p2h in grid:
        j2 = optimal_qubit_catalyst(float(p2c), float(p2h), 2).j_cool_max
        j3 = optimal_qubit_catalyst(float(p2c), float(p2h), 3).j_cool_max
        assert j3 >= j2 - 1e-10
    # Cooling regions widen with n.
    for p2c, p2h in grid:
        for n in range(2, 8):
            jn = optimal_qubit_catalyst(float(p2c), float(p2h), n).j_cool_max
            jn1 = optimal_qubit_catalyst(float(p2c), float(p2h), n + 1).j_cool_max
            if jn > 1e-10:
                assert jn1 > 0.0
    print("PASS: rank {2,3} optimal at equal temperatures; rank 3 >= rank 2; regions widen with n")


def test_catalysis_property_suite():
    """Catalyst preserved to 1e-10 and majorization violated by 1e-12 on
    >= 1000 randomized plans, < 30 s."""
    start = time.monotonic()
    rng = np.random.default_rng(2024)
    verified = 0

    # Certified loops from the existence check.
    produced = 0
    while produced < 450:
        dv = int(rng.integers(2, 5))
        pc = _random_sorted(rng, 2)
        ph = _random_sorted(rng, 2)
        pv = _random_sorted(rng, dv)
        cert = check_cnu1(pc, ph, pv)
        if cert is None:
            continue
        plan = build_plan(pc, ph, pv, cert)
        state = JointState.from_product(pc, ph, pv)
        _, report = execute_plan(state, plan)
        assert report.catalyst_max_deviation <= 1e-10
        assert report.prefix_delta >= 1e-12
        produced += 1
    verified += produced

    # Synthesized catalysts.
    produced = 0
    while produced < 250:
        p2h = float(rng.uniform(0.15, 0.45))
        dc = int(rng.integers(2, 4))
        pc = _random_sorted(rng, dc)
        ph = DiagonalState((1 - p2h, p2h))
        pv, cert = synthesize_catalyst(pc, ph)
        if pv.dim > 40:
            continue
        plan = build_plan(pc, ph, pv, cert)
        state = JointState.from_product(pc, ph, pv)
        _, report = execute_plan(state, plan)
        assert report.catalyst_max_deviation <= 1e-10
        assert report.prefix_delta >= 1e-12
        produced += 1
    verified += produced

    # General enhancement construction.
    produced = 0
    while produced < 150:
        dh = int(rng.integers(3, 5))
        p2 = float(rng.uniform(0.25, 0.45))
        pc = DiagonalState((1 - p2, p2))
        ph = _random_sorted(rng, dh)
        if not general_enhancement_applicable(ph):
            continue
        try:
            result = general_enhancement(pc, ph)
        except Exception:
            continue
        if result.catalyst.dim > 40:
            continue
        assert result.catalyst_deviation <= 1e-10
        assert result.extra_delta_p1c >= 1e-12
        produced += 1
    verified += produced

    # Degenerate 3-level enhancement loops.
    produced = 0
    while produced < 150:
        p2c = float(rng.uniform(0.1, 0.45))
        x = float(rng.uniform(0.01, 0.9)) * p2c / (1 - p2c)
        _, _, dev = simulate_enhancement_degenerate3(p2c, x)
        jp = catalytic_enhancement_degenerate3(
            p2c, x, optimal_enhancement_p1v(p2c, x)
        ).jp_cool
        assert dev <= 1e-10
        assert jp >= 1e-12
        produced += 1
    verified += produced

    elapsed = time.monotonic() - start
    assert verified >= 1000
    assert elapsed < 30.0
    print(f"PASS: {verified} randomized plans catalytic (<=1e-10) and non-unital (>=1e-12), {elapsed:.1f}s")


def test_existence_check_completeness_oracle():
    """Existence check vs exhaustive enumeration, 500 instances, zero
    disagreements."""
    rng = np.random.default_rng(7)
    disagreements = 0
    for _ in range(500):
        dv = int(rng.integers(2, 4))
        pc = _random_sorted(rng, 2)
        ph = _random_sorted(rng, 2)
        pv = _random_sorted(rng, dv)
        fast = check_cnu1(pc, ph, pv) is not None
        slow = cnu1_exists_bruteforce(pc.probs, ph.probs, pv.probs)
        if fast != slow:
            disagreements += 1
    assert disagreements == 0
    print("PASS: existence check agrees with exhaustive enumeration on 500/500 instances")


def test_hot_only_optimality_oracle():
    """Hot-only plan vs best permutation, 200 instances, post-state passive."""
    rng = np.random.default_rng(11)
    for _ in range(200):
        dh = int(rng.integers(2, 6))
        pc = _random_sorted(rng, 2)
        ph = _random_sorted(rng, dh)
        plan = optimal_hot_only_cooling(pc, ph)
        assert abs(plan.delta_p1c - best_hot_only_delta(pc.probs, ph.probs)) <= 1e-12
        assert joint_passive_wrt_cold(plan.sectors)
    print("PASS: hot-only plans optimal vs permutations and passive, 200/200 instances")


def test_coefficient_consistency_and_conjecture():
    """Two-qubit coefficient identities and the k <= 14 domination claim."""
    grid = np.linspace(0.0, 0.5, 100)
    for p2 in grid:
        assert abs(cooling_coefficient(2, float(p2)) - xi2(float(p2))) <= 1e-12
    # Closed form vs the joint-space construction (one cold + two hot qubits).
    for p2 in (0.1, 0.2, 0.3, 0.4):
        qubit = np.array([1 - p2, p2])
        ph = DiagonalState(tuple(np.sort(np.kron(qubit, qubit))[::-1]))
        plan = optimal_hot_only_cooling(DiagonalState((1 - p2, p2)), ph)
        assert abs(plan.delta_p1c / 2 - xi2(p2)) <= 1e-12
    assert verify_coefficient_conjecture(14, grid).holds
    print("PASS: xi^(2) closed form consistent to 1e-12; xi^(k) <= xi^(2) for k <= 14")


def test_ensemble_exact_numbers():
    """Performance-ratio limits, advantage thresholds, and the ratio bound."""
    assert abs(performance_ratio(QubitEnsembleParams(12, 7, 0.5)).value - 4 / 3) <= 1e-12
    assert abs(performance_ratio(QubitEnsembleParams(12, 7, 0.0)).value - 2.0) <= 1e-12
    assert abs(cc_advantage_threshold(0.0) - 1 / 3) <= 1e-12
    assert abs(cc_advantage_threshold(0.5) - 3 / 7) <= 1e-12
    for p2 in np.linspace(0.0, 0.5, 50):
        r = optimal_nc_comparison(10, float(p2)).ratio_vs_best_mbc
        assert 1.0 - 1e-12 <= r <= 1.5 + 1e-12
    print("PASS: gamma = 4/3 and -> 2 limits; thresholds 1/3 and 3/7; ratio in [1, 3/2]")


def test_thermometry_suite():
    """Analytic sensitivities vs finite differences; sigma ordering; < 10 s."""
    start = time.monotonic()
    levels = EnergyLevels((0.0, 0.0, 1.0))
    h = 1e-5
    xs = np.logspace(-4, math.log10(0.999), 200)
    for ratio in (0.1, 0.3, 0.6):
        p1 = 1.0 / (1.0 + ratio)
        probe = DiagonalState((p1, 1.0 - p1))
        for x in xs:
            beta = -math.log(float(x))
            setup = ThermometrySetup(probe, levels, beta)
            prime = probe_after_optimal_swap(setup)
            double = sensitivity_after_catalytic(setup)
            # Finite-difference cross-checks (catalyst frozen at its value).
            fd1 = (p1_after_swap(p1, levels, beta + h) - p1_after_swap(p1, levels, beta - h)) / (2 * h)
            assert abs(prime.dp1_dbeta - fd1) <= 1e-6 * max(abs(fd1), 1e-12)
            p1v = double.optimal_p1v
            fd2 = (
                p1_after_catalytic(p1, levels, beta + h, p1v)
                - p1_after_catalytic(p1, levels, beta - h, p1v)
            ) / (2 * h)
            assert abs(double.dp1_dbeta - fd2) <= 1e-6 * max(abs(fd2), 1e-12)
            # Ordering and the environment Fisher bound.
            cr = cramer_rao_bound(levels, beta)
            assert double.sigma < prime.sigma
            assert prime.sigma >= cr - 1e-12
            assert double.sigma >= cr - 1e-12
    elapsed = time.monotonic() - start
    assert elapsed < 10.0
    print(f"PASS: thermometry sensitivities match FD to 1e-6, sigma'' < sigma' >= CR on 3x200 grid, {elapsed:.1f}s")


def test_enhancement_closed_form_matches_simulation():
    """Loop-increment closed form vs explicit 12-dim simulation on both
    sweep setups; total current strictly beats the bare current in-regime."""
    # Fixed hot factor, sweep over the cold state.
    for p2c in np.linspace(0.05, 0.45, 15):
        res = catalytic_enhancement_degenerate3(
            float(p2c), 0.01, optimal_enhancement_p1v(float(p2c), 0.01)
        )
        jp, total, dev = simulate_enhancement_degenerate3(float(p2c), 0.01)
        assert abs(res.jp_cool - jp) <= 1e-10
        assert dev <= 1e-10
        assert res.j_cool + res.jp_cool > res.j_cool
    # Fixed cold state, sweep over the hot factor up to the regime boundary.
    for x_cold in (0.1, 0.4, 0.8):
        p2c = x_cold / (1 + x_cold)
        for x in np.linspace(x_cold / 10, x_cold, 10):
            res = catalytic_enhancement_degenerate3(
                p2c, float(x), optimal_enhancement_p1v(p2c, float(x))
            )
            jp, total, dev = simulate_enhancement_degenerate3(p2c, float(x))
            assert abs(res.jp_cool - jp) <= 1e-10
            assert dev <= 1e-10
            assert res.jp_cool > 0.0
    print("PASS: enhancement closed form equals simulated loop current to 1e-10 on both sweeps")
