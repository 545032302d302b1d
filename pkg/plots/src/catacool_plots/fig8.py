"""Hot-factor sweep of the bare vs enhanced cooling current (panels a-c).

Input: a ``catacool enhance --sweep hot`` CSV with columns
exp_neg_beta_h_eps3, J_cool, J_total.  The three panels of the family use
the same rendering on CSVs generated at different cold-state parameters,
so the script takes one input/output pair per invocation.
"""

from __future__ import annotations

from typing import Dict

from catacool_plots.common import make_parser, new_figure, report, save
from catacool_plots.io import load_csv

COLUMNS = ("exp_neg_beta_h_eps3", "J_cool", "J_total")


def render(input_csv: str, output: str) -> Dict[str, int]:
    rows = load_csv(input_csv, COLUMNS)
    rows.sort(key=lambda r: r["exp_neg_beta_h_eps3"])
    xs = [r["exp_neg_beta_h_eps3"] for r in rows]
    fig, ax = new_figure()
    ax.plot(xs, [r["J_cool"] for r in rows], label=r"$J_{\mathrm{cool}}$", color="tab:orange")
    ax.plot(xs, [r["J_total"] for r in rows], label=r"$J_{\mathrm{cool}} + J'_{\mathrm{cool}}$", color="tab:blue")
    ax.axhline(0.0, color="black", linewidth=0.6)
    ax.set_xlabel(r"$e^{-\beta_h \epsilon_3}$")
    ax.set_ylabel("cooling current")
    ax.legend()
    save(fig, output)
    return report({"J_cool": len(xs), "J_total": len(xs)})


def main(argv=None) -> int:
    args = make_parser(__doc__).parse_args(argv)
    render(args.input, args.output)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
