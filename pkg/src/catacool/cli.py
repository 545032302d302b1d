"""Command-line interface: every analysis as a deterministic CSV subcommand.

Exit codes: 0 success, 2 invalid input, 3 out of regime / no transformation,
4 verification failure.  All numeric output goes through the shared
12-significant-digit formatter so identical invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import sys
from typing import Dict, List, Optional, Sequence

import numpy as np

from . import cnu, cooling_opt, figures, multiqubit, oracles, thermometry
from .cnu import fmt
from .errors import (
    InvalidInputError,
    NoLoopError,
    NotSynthesizableError,
    OutsideRegimeError,
    PlanVerificationError,
)
from .currents import JointState
from .states import DiagonalState, EnergyLevels, is_passive_wrt_cold


def parse_probs(text: str) -> DiagonalState:
    try:
        values = [float(v) for v in text.split(",")]
    except ValueError as exc:
        raise InvalidInputError(f"cannot parse probabilities {text!r}") from exc
    total = sum(values)
    if abs(total - 1.0) > 1e-6:
        raise InvalidInputError(f"probabilities sum to {total!r}, not 1")
    if abs(total - 1.0) > 1e-9:
        print(
            f"warning: probabilities sum to {total!r}; renormalizing",
            file=sys.stderr,
        )
        values = [v / total for v in values]
    return DiagonalState(tuple(values))


def load_config(path: Optional[str]) -> Dict[str, str]:
    cfg: Dict[str, str] = {}
    if path is None:
        return cfg
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for raw in fh:
                line = raw.strip()
                if not line or line.startswith("#") or "=" not in line:
                    continue
                key, value = line.split("=", 1)
                cfg[key.strip()] = value.strip()
    except OSError as exc:
        raise InvalidInputError(f"cannot read config {path!r}: {exc}") from exc
    return cfg


def _emit(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _kv_csv(pairs: Sequence) -> str:
    lines = ["key,value"]
    for key, value in pairs:
        lines.append(f"{key},{figures.format_value(value)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_passivity(args, cfg) -> int:
    pc = parse_probs(args.pc)
    ph = parse_probs(args.ph)
    passive = is_passive_wrt_cold(pc.probs, ph.probs)
    _emit(_kv_csv([("passive", passive)]), args.output)
    return 0


def _certificate_rows(cert: Optional[cnu.Cnu1Certificate]) -> str:
    header = "exists,i,l,lp,chain_kind,loop_current"
    if cert is None:
        return header + "\nfalse,,,,,\n"
    return (
        header
        + f"\ntrue,{cert.i},{cert.l},{cert.lp},{cert.chain_kind},{fmt(cert.loop_current)}\n"
    )


def _cmd_cnu1_check(args, cfg) -> int:
    pv = parse_probs(args.pv)
    if args.ps is not None:
        cert = cnu.check_cnu1_general(parse_probs(args.ps), pv)
    else:
        cert = cnu.check_cnu1(parse_probs(args.pc), parse_probs(args.ph), pv)
    _emit(_certificate_rows(cert), args.output)
    return 0 if cert is not None else 3


def _cmd_cnu1_run(args, cfg) -> int:
    pv = parse_probs(args.pv)
    if args.ps is not None:
        ps = parse_probs(args.ps)
        cert = cnu.check_cnu1_general(ps, pv)
        factors = (ps, None, pv)
    else:
        pc, ph = parse_probs(args.pc), parse_probs(args.ph)
        cert = cnu.check_cnu1(pc, ph, pv)
        factors = (pc, ph, pv)
    if cert is None:
        raise NoLoopError("no CNU1 transformation exists for these spectra")
    plan = cnu.build_plan(factors[0], factors[1], factors[2], cert)
    present = [f for f in factors if f is not None]
    state = JointState.from_product(*present)
    _, report = cnu.execute_plan(state, plan)
    if args.plan_out:
        _emit(cnu.serialize_plan(plan), args.plan_out)
    rows = [
        ("chain_kind", cert.chain_kind),
        ("loop_current", cert.loop_current),
        ("catalyst_max_deviation", report.catalyst_max_deviation),
        ("violated_prefix", "" if report.violated_prefix is None else report.violated_prefix),
        ("prefix_delta", report.prefix_delta),
    ]
    _emit(_kv_csv(rows), args.output)
    return 0


def _cmd_synthesize(args, cfg) -> int:
    pc = parse_probs(args.pc)
    ph = parse_probs(args.ph)
    pv, cert = cnu.synthesize_catalyst(pc, ph)
    rows = [
        ("dv", pv.dim),
        ("chain_kind", cert.chain_kind),
        ("i", cert.i),
        ("l", cert.l),
        ("lp", cert.lp),
        ("loop_current", cert.loop_current),
    ]
    rows += [(f"pv_{k + 1}", pv[k]) for k in range(pv.dim)]
    _emit(_kv_csv(rows), args.output)
    return 0


def _cmd_diagram(args, cfg) -> int:
    pc = parse_probs(args.pc)
    ph = parse_probs(args.ph)
    pv = parse_probs(args.pv)
    plan = None
    if args.with_plan:
        cert = cnu.check_cnu1(pc, ph, pv)
        if cert is None:
            raise NoLoopError("no CNU1 transformation exists for these spectra")
        plan = cnu.build_plan(pc, ph, pv, cert)
    data = cnu.diagram_export(pc, ph, pv, plan)
    _emit(cnu.diagram_to_csv(data), args.output)
    return 0


def _grid(cfg: Dict[str, str], key: str, lo: float, hi: float, points: int) -> np.ndarray:
    lo = float(cfg.get(f"{key}_min", lo))
    hi = float(cfg.get(f"{key}_max", hi))
    points = int(cfg.get(f"{key}_points", points))
    if points < 2 or not lo < hi:
        raise InvalidInputError(f"bad grid spec for {key!r}")
    return np.linspace(lo, hi, points)


def _cmd_optimal_qubit(args, cfg) -> int:
    if args.sweep:
        p2h = _grid(cfg, "p2h", 0.025, 0.475, 20)
        fracs = _grid(cfg, "frac", 0.05, 1.0, 20)
        n_values = [int(v) for v in cfg.get("n_values", "2,3,4,5").split(",")]
        header, rows = figures.qubit_catalyst_sweep(
            [float(v) for v in p2h], [float(v) for v in fracs], n_values
        )
        _emit(figures.rows_to_csv(header, rows), args.output)
        return 0
    if args.p2c is None or args.p2h is None:
        raise InvalidInputError("need --p2c and --p2h (or --sweep)")
    sol = cooling_opt.optimal_qubit_catalyst(args.p2c, args.p2h, args.n)
    rows = [
        ("n", sol.n),
        ("J_cool_max", sol.j_cool_max),
        ("r_h", sol.r_h),
        ("region", sol.region),
    ]
    rows += [(f"pv_{k + 1}", sol.spectrum[k]) for k in range(sol.n)]
    _emit(_kv_csv(rows), args.output)
    return 0


def _cmd_enhance(args, cfg) -> int:
    if args.sweep == "cold":
        x_hot = float(cfg.get("x_hot", args.x if args.x is not None else 0.01))
        points = int(cfg.get("points", args.points))
        header, rows = figures.enhancement_vs_cold_sweep(x_hot, points)
        _emit(figures.rows_to_csv(header, rows), args.output)
        return 0
    if args.sweep == "hot":
        if args.x_cold is None:
            raise InvalidInputError("--sweep hot needs --x-cold")
        points = int(cfg.get("points", args.points))
        header, rows = figures.enhancement_vs_hot_sweep(args.x_cold, points)
        _emit(figures.rows_to_csv(header, rows), args.output)
        return 0
    if args.p2c is None or args.x is None:
        raise InvalidInputError("need --p2c and --x (or --sweep)")
    p1v = args.p1v
    if p1v is None:
        p1v = cooling_opt.optimal_enhancement_p1v(args.p2c, args.x)
    res = cooling_opt.catalytic_enhancement_degenerate3(args.p2c, args.x, p1v)
    rows = [
        ("J_cool", res.j_cool),
        ("Jp_cool", res.jp_cool),
        ("Jp_res_left", res.jp_res_left),
        ("Jp_res_right", res.jp_res_right),
        ("final_p1c", res.final_p1c),
        ("optimal_p1v", res.optimal_p1v),
        ("p1v_matches", res.p1v_matches),
    ]
    _emit(_kv_csv(rows), args.output)
    return 0


def _cmd_mbc_vs_cc(args, cfg) -> int:
    if args.sweep == "xi":
        k_max = int(cfg.get("k_max", 14))
        points = int(cfg.get("points", args.points))
        header, rows = figures.coefficient_sweep(k_max, points)
        _emit(figures.rows_to_csv(header, rows), args.output)
        return 0
    if args.sweep == "gamma":
        points = int(cfg.get("points", args.points))
        header, rows = figures.gamma_sweep(points)
        _emit(figures.rows_to_csv(header, rows), args.output)
        return 0
    if args.N is None or args.Nc is None or args.p2 is None:
        raise InvalidInputError("need --N, --Nc and --p2 (or --sweep)")
    params = multiqubit.QubitEnsembleParams(args.N, args.Nc, args.p2)
    gamma = multiqubit.performance_ratio(params)
    bounds = multiqubit.q_mbc_bounds(params)
    rows = [
        ("Q_cc", multiqubit.q_cc(params)),
        ("Q_mbc_lower", bounds.lower),
        ("Q_mbc_upper", bounds.upper),
        ("Q_mbc_exact", bounds.exact),
        ("boundary_cell", bounds.boundary),
        ("gamma_regime", gamma.regime),
        ("gamma", "" if gamma.value is None else gamma.value),
        ("gamma_upper_bound", gamma.upper_bound),
        ("gamma_exact", gamma.exact),
    ]
    _emit(_kv_csv(rows), args.output)
    return 0


def _cmd_thermometry(args, cfg) -> int:
    eps3 = float(cfg.get("eps3", args.eps3))
    if args.beta is not None:
        probe = parse_probs(args.probe)
        levels = EnergyLevels((0.0, 0.0, eps3))
        setup = thermometry.ThermometrySetup(probe, levels, args.beta)
        prime = thermometry.probe_after_optimal_swap(setup)
        double = thermometry.sensitivity_after_catalytic(setup)
        rows = [
            ("sigma_prime", prime.sigma),
            ("sigma_double_prime", double.sigma),
            ("cramer_rao", thermometry.cramer_rao_bound(levels, args.beta)),
            ("in_optimal_regime", prime.in_optimal_regime),
            ("sigma_prime_T_units", thermometry.sigma_in_temperature_units(prime.sigma, args.beta)),
        ]
        _emit(_kv_csv(rows), args.output)
        return 0
    points = int(cfg.get("points", args.points))
    header, rows = figures.thermometry_sweep(args.ratio, points, eps3)
    _emit(figures.rows_to_csv(header, rows), args.output)
    return 0


def _cmd_oracle(args, cfg) -> int:
    rng = np.random.default_rng(args.seed)
    disagreements = 0
    if args.which == "cnu1":
        for _ in range(args.trials):
            dv = int(rng.integers(2, 4))
            pc = DiagonalState(tuple(sorted(rng.dirichlet(np.ones(2)), reverse=True)))
            ph = DiagonalState(tuple(sorted(rng.dirichlet(np.ones(2)), reverse=True)))
            pv = DiagonalState(tuple(sorted(rng.dirichlet(np.ones(dv)), reverse=True)))
            fast = cnu.check_cnu1(pc, ph, pv) is not None
            slow = oracles.cnu1_exists_bruteforce(pc.probs, ph.probs, pv.probs)
            if fast != slow:
                disagreements += 1
    elif args.which == "hot-only":
        for _ in range(args.trials):
            dh = int(rng.integers(2, 6))
            pc = DiagonalState(tuple(sorted(rng.dirichlet(np.ones(2)), reverse=True)))
            ph = DiagonalState(tuple(sorted(rng.dirichlet(np.ones(dh)), reverse=True)))
            plan = cooling_opt.optimal_hot_only_cooling(pc, ph)
            best = oracles.best_hot_only_delta(pc.probs, ph.probs)
            if abs(plan.delta_p1c - best) > 1e-12:
                disagreements += 1
    elif args.which == "passivity":
        for _ in range(args.trials):
            dc = int(rng.integers(2, 5))
            dh = int(rng.integers(2, 5))
            pc = DiagonalState(tuple(sorted(rng.dirichlet(np.ones(dc)), reverse=True)))
            ph = DiagonalState(tuple(sorted(rng.dirichlet(np.ones(dh)), reverse=True)))
            fast = is_passive_wrt_cold(pc.probs, ph.probs)
            slow = oracles.is_passive_oracle(pc.probs, ph.probs)
            if fast != slow:
                disagreements += 1
    elif args.which == "lp":
        for _ in range(args.trials):
            p2h = float(rng.uniform(0.05, 0.45))
            p2c = float(rng.uniform(0.01, 1.0)) * p2h
            n = int(rng.integers(2, 6))
            closed = cooling_opt.optimal_qubit_catalyst(p2c, p2h, n).j_cool_max
            lp = oracles.max_loop_current_lp(p2c, p2h, n)
            if closed > 1e-9:
                if abs(lp - closed) > 1e-6:
                    disagreements += 1
            elif lp > 1e-9:
                disagreements += 1
    else:
        raise InvalidInputError(f"unknown oracle {args.which!r}")
    _emit(
        _kv_csv([("trials", args.trials), ("disagreements", disagreements)]),
        args.output,
    )
    if disagreements:
        raise PlanVerificationError(f"{disagreements} oracle disagreements")
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catacool",
        description="Catalytic cooling and thermometry protocols for diagonal states.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="plain-text key=value sweep config")
    common.add_argument("--seed", type=int, default=0, help="RNG seed for oracle runs")
    common.add_argument(
        "-o", "--output", help="write CSV to this file instead of stdout"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("passivity", parents=[common], help="joint passivity of cold x hot")
    p.add_argument("--pc", required=True)
    p.add_argument("--ph", required=True)
    p.set_defaults(func=_cmd_passivity)

    p = sub.add_parser("cnu1-check", parents=[common], help="existence certificate for a CNU1 loop")
    p.add_argument("--pc")
    p.add_argument("--ph")
    p.add_argument("--ps", help="general system spectrum (replaces --pc/--ph)")
    p.add_argument("--pv", required=True)
    p.set_defaults(func=_cmd_cnu1_check)

    p = sub.add_parser("cnu1-run", parents=[common], help="build, execute and verify the CNU1 plan")
    p.add_argument("--pc")
    p.add_argument("--ph")
    p.add_argument("--ps")
    p.add_argument("--pv", required=True)
    p.add_argument("--plan-out", help="write the serialized plan to this file")
    p.set_defaults(func=_cmd_cnu1_run)

    p = sub.add_parser("synthesize", parents=[common], help="geometric catalyst enabling a CNU1 loop")
    p.add_argument("--pc", required=True)
    p.add_argument("--ph", required=True)
    p.set_defaults(func=_cmd_synthesize)

    p = sub.add_parser("diagram", parents=[common], help="log-coordinate column/row/arrow export")
    p.add_argument("--pc", required=True)
    p.add_argument("--ph", required=True)
    p.add_argument("--pv", required=True)
    p.add_argument("--with-plan", action="store_true")
    p.set_defaults(func=_cmd_diagram)

    p = sub.add_parser("optimal-qubit", parents=[common], help="closed-form optimal qubit-qubit catalyst")
    p.add_argument("--p2c", type=float)
    p.add_argument("--p2h", type=float)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--sweep", action="store_true")
    p.set_defaults(func=_cmd_optimal_qubit)

    p = sub.add_parser("enhance", parents=[common], help="catalytic enhancement, degenerate 3-level hot")
    p.add_argument("--p2c", type=float)
    p.add_argument("--x", type=float)
    p.add_argument("--p1v", type=float)
    p.add_argument("--x-cold", type=float)
    p.add_argument("--sweep", choices=["cold", "hot"])
    p.add_argument("--points", type=int, default=100)
    p.set_defaults(func=_cmd_enhance)

    p = sub.add_parser("mbc-vs-cc", parents=[common], help="many-body vs catalytic cooling economics")
    p.add_argument("--N", type=int)
    p.add_argument("--Nc", type=int)
    p.add_argument("--p2", type=float)
    p.add_argument("--sweep", choices=["xi", "gamma"])
    p.add_argument("--points", type=int, default=100)
    p.set_defaults(func=_cmd_mbc_vs_cc)

    p = sub.add_parser("thermometry", parents=[common], help="estimation-error sweep or point check")
    p.add_argument("--ratio", type=float, default=0.3, help="probe p2/p1")
    p.add_argument("--probe", default="0.75,0.25")
    p.add_argument("--beta", type=float)
    p.add_argument("--eps3", type=float, default=1.0)
    p.add_argument("--points", type=int, default=200)
    p.set_defaults(func=_cmd_thermometry)

    p = sub.add_parser("oracle", parents=[common], help="randomized brute-force cross-checks")
    p.add_argument("--which", required=True, choices=["passivity", "cnu1", "hot-only", "lp"])
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=_cmd_oracle)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = load_config(args.config)
    try:
        return args.func(args, cfg)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OutsideRegimeError, NoLoopError, NotSynthesizableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except PlanVerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
