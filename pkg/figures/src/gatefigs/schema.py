"""CSV column contracts and strict loading.

The simulator promises a fixed header per dataset kind; anything else is
refused with an error naming the offending columns, so that silently
mislabelled axes can never reach a rendered figure.
"""
from __future__ import annotations

import csv
from pathlib import Path

SCHEMAS = {
    "fig2": ["alpha", "phi", "fidelity_aa"],
    "fig3": ["kT", "alpha", "fidelity_dyn", "fidelity_closed_form"],
    "fig4": ["alpha", "phi", "f_aa", "f_dyn", "diff"],
    "fig6": ["phi", "gate", "bath_topology", "avg_fidelity", "std_error"],
    "fig7": ["t", "gate", "bath_topology", "input_state", "concurrence"],
}

# columns that carry labels rather than numbers
_TEXT_COLUMNS = {"gate", "bath_topology", "input_state"}


class SchemaError(ValueError):
    """Raised when a CSV header does not match the documented schema."""


def check_header(kind: str, header: list[str]):
    expected = SCHEMAS[kind]
    if header == expected:
        return
    missing = [c for c in expected if c not in header]
    unexpected = [c for c in header if c not in expected]
    parts = [f"{kind} dataset header mismatch"]
    if missing:
        parts.append("missing column(s): " + ", ".join(missing))
    if unexpected:
        parts.append("unexpected column(s): " + ", ".join(unexpected))
    if not missing and not unexpected:
        parts.append(f"wrong column order: {header} (expected {expected})")
    raise SchemaError("; ".join(parts))


def load_dataset(kind: str, path) -> dict[str, list]:
    """Read a CSV into per-column lists, validating the header first."""
    if kind not in SCHEMAS:
        raise ValueError(f"unknown dataset kind {kind!r}")
    path = Path(path)
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path} is empty") from None
        check_header(kind, header)
        cols: dict[str, list] = {name: [] for name in header}
        for lineno, row in enumerate(reader, start=2):
            if len(row) != len(header):
                raise SchemaError(f"{path}:{lineno}: expected "
                                  f"{len(header)} fields, got {len(row)}")
            for name, value in zip(header, row):
                if name in _TEXT_COLUMNS:
                    cols[name].append(value)
                else:
                    try:
                        cols[name].append(float(value))
                    except ValueError:
                        raise SchemaError(
                            f"{path}:{lineno}: column {name!r} has "
                            f"non-numeric value {value!r}") from None
    if not next(iter(cols.values())):
        raise SchemaError(f"{path} has a header but no data rows")
    return cols
