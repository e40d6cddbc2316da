"""Plot rendering for the phase-gate simulator's CSV datasets.

This package is a pure consumer of the simulator's file interface: every
figure is drawn from a CSV (with its documented header) without re-running
any simulation.
"""

from .schema import SCHEMAS, SchemaError, load_dataset
from .render import render

__all__ = ["SCHEMAS", "SchemaError", "load_dataset", "render"]

__version__ = "0.1.0"
