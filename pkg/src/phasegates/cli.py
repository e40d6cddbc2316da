"""Command line interface: one subcommand per experiment.

Flags mirror the experiment configuration fields; ``--config FILE`` reads a
JSON file with the same field names, and explicit flags override it.  Results
go to the CSV/JSON files only; stdout stays quiet apart from the output paths.
"""
from __future__ import annotations

import dataclasses
import json
import sys

import click

from .experiments import EXPERIMENTS, GATES, ExperimentConfig, run

_FIELDS = {f.name: f for f in dataclasses.fields(ExperimentConfig)}


def _build_config(experiment: str, config_file, flags: dict) -> ExperimentConfig:
    values: dict = {}
    if config_file:
        try:
            with open(config_file, encoding="utf-8") as fh:
                loaded = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise click.ClickException(f"cannot read config file: {exc}")
        for key, val in loaded.items():
            if key == "schema_version":
                continue
            if key not in _FIELDS:
                raise click.UsageError(f"config file: unknown field {key!r}")
            values[key] = tuple(val) if key == "kt" else val
    for key, val in flags.items():
        if val is not None and val != ():
            values[key] = val
    values["experiment"] = experiment
    if "output" not in values:
        raise click.UsageError("output: no output path given")
    try:
        cfg = ExperimentConfig(**values)
        cfg.validate()
    except (TypeError, ValueError) as exc:
        raise click.UsageError(str(exc))
    return cfg


def _execute(experiment, config, flags):
    cfg = _build_config(experiment, config, flags)
    try:
        csv_path, sidecar = run(cfg)
    except OSError as exc:
        raise click.ClickException(f"cannot write output: {exc}")
    click.echo(f"{csv_path}")
    click.echo(f"{sidecar}")


def _common_options(fn):
    opts = [
        click.option("--config", type=click.Path(), default=None,
                     help="JSON config file; flags override its values."),
        click.option("--output", "-o", type=click.Path(), default=None,
                     help="Output CSV path (JSON sidecar written next to it)."),
        click.option("--b0", type=float, default=None, help="Field scale B0 in GHz."),
        click.option("--jm", type=float, default=None, help="Exchange scale Jm in GHz."),
        click.option("--coupling", type=float, default=None,
                     help="Dimensionless bath coupling strength."),
        click.option("--omega-cutoff", type=float, default=None,
                     help="Bath cutoff in GHz (default 50*B0 or 50*Jm)."),
        click.option("--kt", type=float, multiple=True,
                     help="Temperature(s) in GHz; repeatable."),
        click.option("--coupling-axis", type=click.Choice(["z", "x"]), default=None),
        click.option("--seed", type=int, default=None),
        click.option("--time-samples", type=int, default=None),
    ]
    for opt in reversed(opts):
        fn = opt(fn)
    return fn


def _grid_options(fn):
    opts = [
        click.option("--alpha-min", type=float, default=None),
        click.option("--alpha-max", type=float, default=None),
        click.option("--alpha-points", type=int, default=None),
        click.option("--phi-min", type=float, default=None),
        click.option("--phi-max", type=float, default=None),
        click.option("--phi-points", type=int, default=None),
    ]
    for opt in reversed(opts):
        fn = opt(fn)
    return fn


@click.group()
def main():
    """Geometric vs dynamical phase gates under Bloch-Redfield decoherence."""


@main.command("fig2-grid")
@_common_options
@_grid_options
def fig2_grid(config, **flags):
    """Geometric-gate fidelity on an (alpha, phi) grid."""
    _execute("fig2-grid", config, flags)


@main.command("fig3-dyn-fidelity")
@_common_options
@click.option("--alpha-min", type=float, default=None)
@click.option("--alpha-max", type=float, default=None)
@click.option("--alpha-points", type=int, default=None)
@click.option("--phi", type=float, default=None)
def fig3_dyn_fidelity(config, **flags):
    """Dynamical-gate fidelity versus alpha at several temperatures."""
    _execute("fig3-dyn-fidelity", config, flags)


@main.command("fig4-contour")
@_common_options
@_grid_options
def fig4_contour(config, **flags):
    """Dense (alpha, phi) grid of geometric and dynamical fidelities."""
    _execute("fig4-contour", config, flags)


@main.command("fig6-avg-fidelity")
@_common_options
@click.option("--phi-min", type=float, default=None)
@click.option("--phi-max", type=float, default=None)
@click.option("--phi-points", type=int, default=None)
@click.option("--n-states", type=int, default=None)
@click.option("--sampler", type=click.Choice(["haar", "angles"]), default=None)
def fig6_avg_fidelity(config, **flags):
    """State-averaged two-qubit gate fidelity versus phi."""
    _execute("fig6-avg-fidelity", config, flags)


@main.command("fig7-concurrence")
@_common_options
@click.option("--phi", type=float, default=None)
@click.option("--t-max", type=float, default=None,
              help="Extend the trajectory beyond the gate duration (ns).")
def fig7_concurrence(config, **flags):
    """Concurrence evolution from each Bell input state."""
    _execute("fig7-concurrence", config, flags)


@main.command("single-run")
@_common_options
@click.option("--gate", type=click.Choice(sorted(GATES)), default=None)
@click.option("--input-state", type=str, default=None,
              help="'alpha:<radians>' for one qubit; Bell name or 'x++' for two.")
@click.option("--phi", type=float, default=None)
@click.option("--bath-topology", type=click.Choice(["common", "independent"]),
              default=None)
@click.option("--t-max", type=float, default=None)
def single_run(config, **flags):
    """One trajectory: fidelity, trace, minimum eigenvalue (and concurrence)."""
    _execute("single-run", config, flags)


if __name__ == "__main__":
    sys.exit(main())
