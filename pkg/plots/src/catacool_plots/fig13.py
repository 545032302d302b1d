"""Thermometric sensitivity vs environment temperature (panels a-c).

Input: a ``catacool thermometry --ratio ... --points ...`` CSV with
columns x, sigma_prime, sigma_double_prime, cramer_rao,
in_optimal_regime.  The panels of the family use the same rendering on
CSVs generated at different probe ratios.
"""

from __future__ import annotations

from typing import Dict

from catacool_plots.common import make_parser, new_figure, report, save
from catacool_plots.io import load_csv

COLUMNS = ("x", "sigma_prime", "sigma_double_prime", "cramer_rao", "in_optimal_regime")

SERIES = (
    ("sigma_prime", r"$\sigma'$", "tab:orange", "-"),
    ("sigma_double_prime", r"$\sigma''$", "tab:blue", "-"),
    ("cramer_rao", r"$1/\sqrt{F_\beta}$", "black", "--"),
)


def render(input_csv: str, output: str) -> Dict[str, int]:
    rows = load_csv(input_csv, COLUMNS)
    rows.sort(key=lambda r: r["x"])
    xs = [r["x"] for r in rows]
    fig, ax = new_figure()
    counts: Dict[str, int] = {}
    for column, label, color, style in SERIES:
        ax.plot(xs, [r[column] for r in rows], label=label, color=color, linestyle=style)
        counts[column] = len(xs)
    regime_xs = [r["x"] for r in rows if r["in_optimal_regime"]]
    if regime_xs:
        ax.axvspan(min(regime_xs), max(regime_xs), color="tab:green", alpha=0.08)
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel(r"$e^{-\beta \epsilon_3}$")
    ax.set_ylabel(r"temperature estimation error ($\beta$ units)")
    ax.legend()
    save(fig, output)
    return report(counts)


def main(argv=None) -> int:
    args = make_parser(__doc__).parse_args(argv)
    render(args.input, args.output)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
