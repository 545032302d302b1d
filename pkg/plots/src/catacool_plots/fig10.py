"""Per-copy cooling coefficients for k hot qubits (one curve per k).

Input: the ``catacool mbc-vs-cc --sweep xi`` CSV with columns p2, k, xi.
The k = 2 curve is drawn emphasized since it dominates the family.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Dict

from catacool_plots.common import make_parser, new_figure, report, save
from catacool_plots.io import load_csv

COLUMNS = ("p2", "k", "xi")


def render(input_csv: str, output: str) -> Dict[str, int]:
    rows = load_csv(input_csv, COLUMNS)
    curves = defaultdict(list)
    for row in rows:
        curves[int(row["k"])].append((row["p2"], row["xi"]))
    fig, ax = new_figure()
    counts: Dict[str, int] = {}
    for k in sorted(curves):
        pts = sorted(curves[k])
        emphasized = k == 2
        ax.plot(
            [p[0] for p in pts],
            [p[1] for p in pts],
            label=f"k = {k}" if emphasized or k in (3, max(curves)) else None,
            linewidth=2.2 if emphasized else 0.9,
            color="tab:red" if emphasized else None,
            alpha=1.0 if emphasized else 0.7,
        )
        counts[f"k={k}"] = len(pts)
    ax.set_xlabel(r"$p_2$")
    ax.set_ylabel(r"$\xi^{(k)}$")
    ax.legend()
    save(fig, output)
    return report(counts)


def main(argv=None) -> int:
    args = make_parser(__doc__).parse_args(argv)
    render(args.input, args.output)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
