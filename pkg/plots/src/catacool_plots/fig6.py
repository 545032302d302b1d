"""Qubit-catalyst cooling figure family (panels a-d).

Input: the ``catacool optimal-qubit --sweep`` CSV with columns
p2c, p2h, n, J_cool_max, p1c_final, in_cooling_region.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Dict

from catacool_plots.common import make_parser, new_figure, report, save
from catacool_plots.io import load_csv

COLUMNS = ("p2c", "p2h", "n", "J_cool_max", "p1c_final", "in_cooling_region")
PANELS = ("a", "b", "c", "d")

REGION_COLORS = {"inside": "tab:blue", "boundary": "tab:orange", "outside": "tab:gray"}


def _curves_by_n(rows, y_column):
    curves = defaultdict(list)
    for row in rows:
        curves[int(row["n"])].append((row["p2c"], row[y_column]))
    return {n: sorted(pts) for n, pts in sorted(curves.items())}


def render(input_csv: str, output: str, panel: str = "a") -> Dict[str, int]:
    rows = load_csv(input_csv, COLUMNS)
    fig, ax = new_figure()
    counts: Dict[str, int] = {}

    if panel in ("a", "d"):
        diagonal = [r for r in rows if abs(r["p2c"] - r["p2h"]) <= 1e-12]
        column = "J_cool_max" if panel == "a" else "p1c_final"
        for n, pts in _curves_by_n(diagonal, column).items():
            ax.plot([p[0] for p in pts], [p[1] for p in pts], label=f"n = {n}")
            counts[f"n={n}"] = len(pts)
        ax.set_xlabel(r"$p_2^c = p_2^h$")
        ax.set_ylabel(
            r"$J_{\mathrm{cool}}^{\max}$" if panel == "a" else r"final $p_1^c$"
        )
        ax.legend()
    elif panel == "b":
        top = max(r["p2h"] for r in rows)
        hottest = [r for r in rows if abs(r["p2h"] - top) <= 1e-12]
        for n, pts in _curves_by_n(hottest, "J_cool_max").items():
            ax.plot([p[0] for p in pts], [p[1] for p in pts], label=f"n = {n}")
            counts[f"n={n}"] = len(pts)
        ax.set_xlabel(r"$p_2^c$")
        ax.set_ylabel(r"$J_{\mathrm{cool}}^{\max}$ at $p_2^h = %.3g$" % top)
        ax.legend()
    else:  # panel "c": cooling-region map at the largest catalyst rank
        n_top = max(int(r["n"]) for r in rows)
        chosen = [r for r in rows if int(r["n"]) == n_top]
        for region, color in REGION_COLORS.items():
            pts = [(r["p2c"], r["p2h"]) for r in chosen if r["in_cooling_region"] == region]
            if pts:
                ax.scatter(
                    [p[0] for p in pts], [p[1] for p in pts],
                    s=12, color=color, label=region,
                )
            counts[region] = len(pts)
        ax.set_xlabel(r"$p_2^c$")
        ax.set_ylabel(r"$p_2^h$")
        ax.set_title(f"cooling region, n = {n_top}")
        ax.legend()

    save(fig, output)
    return report(counts)


def main(argv=None) -> int:
    args = make_parser(__doc__, PANELS).parse_args(argv)
    render(args.input, args.output, args.panel)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
