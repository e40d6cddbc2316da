"""Command line entry point: one subcommand per figure kind."""
from __future__ import annotations

import sys

import click

from .render import render
from .schema import SCHEMAS, SchemaError

_HELP = {
    "fig2": "Heatmap of geometric-gate fidelity over (alpha, phi).",
    "fig3": "Dynamical-gate fidelity versus alpha, one line per temperature.",
    "fig4": "Fidelity-difference map with the equal-fidelity contour.",
    "fig6": "State-averaged two-qubit fidelity versus phi with error bars.",
    "fig7": "Concurrence trajectories per gate, bath topology and Bell state.",
}


@click.group()
def main():
    """Render figures from the phase-gate simulator's CSV datasets."""


def _make_command(kind: str):
    @main.command(kind, help=_HELP[kind])
    @click.option("--input", "-i", "input_path", required=True,
                  type=click.Path(exists=True, dir_okay=False),
                  help=f"CSV with columns {', '.join(SCHEMAS[kind])}.")
    @click.option("--output", "-o", "output_path", required=True,
                  type=click.Path(dir_okay=False),
                  help="Image path; format follows the extension (png, pdf, svg).")
    def _cmd(input_path, output_path):
        try:
            out = render(kind, input_path, output_path)
        except SchemaError as exc:
            raise click.ClickException(str(exc))
        click.echo(str(out))

    return _cmd


for _kind in SCHEMAS:
    _make_command(_kind)


if __name__ == "__main__":
    sys.exit(main())
