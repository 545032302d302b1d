"""Performance ratio of collective vs per-copy cooling across the
catalyst fraction, with the band between the two temperature limits.

Input: the ``catacool mbc-vs-cc --sweep gamma`` CSV with columns
Nc_over_N, beta_label, gamma_or_bound, is_exact.
"""

from __future__ import annotations

from typing import Dict

from catacool_plots.common import make_parser, new_figure, report, save
from catacool_plots.io import load_csv

COLUMNS = ("Nc_over_N", "beta_label", "gamma_or_bound", "is_exact")

LABEL_STYLE = {
    "beta->0": (r"$\beta \to 0$", "tab:red"),
    "beta->inf": (r"$\beta \to \infty$", "tab:blue"),
}


def render(input_csv: str, output: str) -> Dict[str, int]:
    rows = load_csv(input_csv, COLUMNS)
    series: Dict[str, Dict[float, float]] = {}
    for row in rows:
        series.setdefault(str(row["beta_label"]), {})[row["Nc_over_N"]] = row["gamma_or_bound"]

    fig, ax = new_figure()
    counts: Dict[str, int] = {}
    for label, values in series.items():
        xs = sorted(values)
        pretty, color = LABEL_STYLE.get(label, (label, None))
        ax.plot(xs, [values[x] for x in xs], label=pretty, color=color)
        counts[label] = len(xs)

    # Shade between the two temperature-limit boundaries where both exist.
    if len(series) == 2:
        first, second = series.values()
        shared = sorted(set(first) & set(second))
        ax.fill_between(
            shared,
            [min(first[x], second[x]) for x in shared],
            [max(first[x], second[x]) for x in shared],
            color="tab:purple",
            alpha=0.15,
        )
        counts["shaded"] = len(shared)

    ax.set_xlabel(r"$N_c / N$")
    ax.set_ylabel(r"$\gamma$")
    ax.legend()
    save(fig, output)
    return report(counts)


def main(argv=None) -> int:
    args = make_parser(__doc__).parse_args(argv)
    render(args.input, args.output)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
