"""Figure rendering: one function per dataset kind, dispatched by render().

All figures are static; the contour figure computes the zero level set of
(f_aa - f_dyn) from the emitted grid and simply draws nothing when the set is
empty (e.g. the zero-temperature dataset, where f_dyn is identically 1).
"""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .schema import load_dataset


def _pivot(xs, ys, zs):
    """Rebuild a (row, col) grid from long-format columns."""
    xu = np.unique(xs)
    yu = np.unique(ys)
    grid = np.full((len(xu), len(yu)), np.nan)
    xi = np.searchsorted(xu, xs)
    yi = np.searchsorted(yu, ys)
    grid[xi, yi] = zs
    return xu, yu, grid


def _fig2(cols, ax):
    alphas, phis, f = _pivot(cols["alpha"], cols["phi"], cols["fidelity_aa"])
    im = ax.pcolormesh(phis, alphas, f, shading="nearest", cmap="viridis")
    ax.figure.colorbar(im, ax=ax, label="geometric gate fidelity")
    ax.set_xlabel(r"$\Phi$ (rad)")
    ax.set_ylabel(r"$\alpha$ (rad)")
    ax.set_title("Geometric-gate fidelity over input angle and gate phase")


def _fig3(cols, ax):
    kts = np.asarray(cols["kT"])
    alphas = np.asarray(cols["alpha"])
    for kt in np.unique(kts):
        sel = kts == kt
        order = np.argsort(alphas[sel])
        a = alphas[sel][order]
        ax.plot(a, np.asarray(cols["fidelity_dyn"])[sel][order],
                label=f"kT = {kt:g} GHz")
        ax.plot(a, np.asarray(cols["fidelity_closed_form"])[sel][order],
                linestyle="--", color=ax.lines[-1].get_color(), alpha=0.6)
    ax.set_xlabel(r"$\alpha$ (rad)")
    ax.set_ylabel("dynamical gate fidelity")
    ax.set_title("Dynamical-gate fidelity (solid: numeric, dashed: closed form)")
    ax.legend()


def _fig4(cols, ax):
    alphas, phis, diff = _pivot(cols["alpha"], cols["phi"], cols["diff"])
    span = np.nanmax(np.abs(diff)) or 1.0
    im = ax.pcolormesh(phis, alphas, diff, shading="nearest", cmap="coolwarm",
                       vmin=-span, vmax=span)
    ax.figure.colorbar(im, ax=ax, label=r"$F_{AA} - F_{dyn}$")
    if np.nanmin(diff) < 0.0 < np.nanmax(diff):
        ax.contour(phis, alphas, diff, levels=[0.0], colors="k",
                   linewidths=1.5)
    ax.set_xlabel(r"$\Phi$ (rad)")
    ax.set_ylabel(r"$\alpha$ (rad)")
    ax.set_title("Fidelity difference with the equal-fidelity contour")


def _fig6(cols, ax):
    phis = np.asarray(cols["phi"])
    gates = np.asarray(cols["gate"])
    topos = np.asarray(cols["bath_topology"])
    means = np.asarray(cols["avg_fidelity"])
    errs = np.asarray(cols["std_error"])
    for gate in np.unique(gates):
        for topo in np.unique(topos):
            sel = (gates == gate) & (topos == topo)
            if not np.any(sel):
                continue
            order = np.argsort(phis[sel])
            ax.errorbar(phis[sel][order], means[sel][order],
                        yerr=errs[sel][order], capsize=2, marker="o",
                        markersize=3, label=f"{gate}, {topo} bath")
    ax.set_xlabel(r"$\Phi$ (rad)")
    ax.set_ylabel("state-averaged fidelity")
    ax.set_title("Average two-qubit gate fidelity")
    ax.legend()


def _fig7(cols, fig):
    ts = np.asarray(cols["t"])
    gates = np.asarray(cols["gate"])
    topos = np.asarray(cols["bath_topology"])
    states = np.asarray(cols["input_state"])
    conc = np.asarray(cols["concurrence"])
    panels = [(g, t) for g in np.unique(gates) for t in np.unique(topos)]
    axes = fig.subplots(1, len(panels), sharey=True, squeeze=False)[0]
    for ax, (gate, topo) in zip(axes, panels):
        for state in np.unique(states):
            sel = (gates == gate) & (topos == topo) & (states == state)
            if not np.any(sel):
                continue
            order = np.argsort(ts[sel])
            ax.plot(ts[sel][order], conc[sel][order], label=state)
        ax.set_title(f"{gate}, {topo} bath", fontsize=9)
        ax.set_xlabel("t (ns)")
    axes[0].set_ylabel("concurrence")
    axes[-1].legend(fontsize=7)
    fig.suptitle("Entanglement evolution from each Bell input state")


def render(kind: str, input_path, output_path) -> Path:
    """Load a validated dataset and write the corresponding figure."""
    cols = load_dataset(kind, input_path)
    if kind == "fig7":
        fig = plt.figure(figsize=(11, 3.2))
        _fig7(cols, fig)
    else:
        fig, ax = plt.subplots(figsize=(6, 4.5))
        {"fig2": _fig2, "fig3": _fig3, "fig4": _fig4, "fig6": _fig6}[kind](cols, ax)
    fig.tight_layout()
    output_path = Path(output_path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(output_path, dpi=150)
    plt.close(fig)
    return output_path
