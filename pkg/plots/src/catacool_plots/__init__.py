"""Plotting scripts for catacool sweep CSVs.

Each ``figN`` module renders one figure family from CSV files produced by
the ``catacool`` command-line sweeps.  The scripts only plot the columns
they are given; no physics is recomputed here.
"""

from catacool_plots.io import SchemaError, load_csv

__all__ = ["SchemaError", "load_csv"]

__version__ = "0.1.0"
