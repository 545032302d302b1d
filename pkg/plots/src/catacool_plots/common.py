"""Shared helpers for the figure scripts."""

from __future__ import annotations

import argparse
from typing import Dict

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def make_parser(description: str, panels=None) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description=description)
    parser.add_argument("input", help="input CSV produced by a catacool sweep")
    parser.add_argument("output", help="output image path")
    if panels:
        parser.add_argument(
            "--panel", choices=panels, default=panels[0],
            help="which panel of the figure family to render",
        )
    return parser


def save(fig, output: str) -> None:
    fig.tight_layout()
    fig.savefig(output, dpi=150)
    plt.close(fig)


def new_figure():
    return plt.subplots(figsize=(6.0, 4.2))


def report(counts: Dict[str, int]) -> Dict[str, int]:
    """Identity hook so render functions have one place to return the
    number of points plotted per curve (used by the tests)."""
    return dict(counts)
