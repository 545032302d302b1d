"""Shared CSV loading with schema validation."""

from __future__ import annotations

import csv
from typing import Dict, List, Sequence


class SchemaError(Exception):
    """Raised when a CSV is missing a required column (or is empty)."""


def _parse(value: str):
    if value == "true":
        return True
    if value == "false":
        return False
    try:
        return float(value)
    except ValueError:
        return value


def load_csv(path: str, required: Sequence[str]) -> List[Dict[str, object]]:
    """Read ``path`` and return one dict per data row.

    Numeric fields are parsed to float and the literals ``true``/``false``
    to bool; everything else stays a string.  Raises :class:`SchemaError`
    naming the first required column that the header does not provide,
    which includes the case of an entirely empty file.
    """
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        for column in required:
            if column not in header:
                raise SchemaError(
                    f"{path}: missing required column '{column}' "
                    f"(found: {', '.join(header) if header else 'no header'})"
                )
        return [{k: _parse(v) for k, v in row.items()} for row in reader]
