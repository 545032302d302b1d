"""Cold-state sweep of hot-only vs catalytic cooling (panel 7a).

Input: the ``catacool enhance --sweep cold`` CSV with columns
exp_neg_beta_c_eps, p1c_initial, p1c_hot_only, p1c_catalytic.
"""

from __future__ import annotations

from typing import Dict

from catacool_plots.common import make_parser, new_figure, report, save
from catacool_plots.io import load_csv

COLUMNS = ("exp_neg_beta_c_eps", "p1c_initial", "p1c_hot_only", "p1c_catalytic")

SERIES = (
    ("p1c_initial", "initial", "tab:gray"),
    ("p1c_hot_only", "hot-only swaps", "tab:orange"),
    ("p1c_catalytic", "with catalyst", "tab:blue"),
)


def render(input_csv: str, output: str) -> Dict[str, int]:
    rows = load_csv(input_csv, COLUMNS)
    rows.sort(key=lambda r: r["exp_neg_beta_c_eps"])
    xs = [r["exp_neg_beta_c_eps"] for r in rows]
    fig, ax = new_figure()
    counts: Dict[str, int] = {}
    for column, label, color in SERIES:
        ax.plot(xs, [r[column] for r in rows], label=label, color=color)
        counts[label] = len(xs)
    ax.set_xlabel(r"$e^{-\beta_c \epsilon}$")
    ax.set_ylabel(r"$p_1^c$")
    ax.legend()
    save(fig, output)
    return report(counts)


def main(argv=None) -> int:
    args = make_parser(__doc__).parse_args(argv)
    render(args.input, args.output)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
