"""Figure rendering for the command-line report path.

Figures are written to files next to the delimited output; nothing here
opens a window.  The Agg backend is forced before pyplot is imported so the
module works in headless environments.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def save_larmor_figure(records, path) -> None:
    """Amplitude components and populations against time, two stacked panels."""
    ts = np.array([rec.t for rec in records])
    states = np.array([rec.state for rec in records])
    probs = np.array([rec.probs for rec in records])
    fig, (ax_amp, ax_prob) = plt.subplots(2, 1, sharex=True, figsize=(7, 6))
    for idx, label in enumerate(["a_r", "a_i", "b_r", "b_i"]):
        ax_amp.plot(ts, states[:, idx], label=label)
    ax_amp.set_ylabel("amplitude component")
    ax_amp.legend(loc="upper right", ncol=2)
    ax_prob.plot(ts, probs[:, 0], label="p0")
    ax_prob.plot(ts, probs[:, 1], label="p1", linestyle="--")
    ax_prob.set_xlabel("t")
    ax_prob.set_ylabel("population")
    ax_prob.set_ylim(-0.05, 1.05)
    ax_prob.legend(loc="upper right")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def save_mzi_figure(phis, p0s, p1s, path) -> None:
    """Output-port probabilities against the phase-plate setting."""
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(phis, p0s, label="p0")
    ax.plot(phis, p1s, label="p1", linestyle="--")
    ax.set_xlabel("phi")
    ax.set_ylabel("probability")
    ax.set_ylim(-0.05, 1.05)
    ax.legend(loc="center right")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def save_entropy_figure(alphas, betas, entropy_grid, path) -> None:
    """Heat map of the entanglement entropy over the state-family parameters."""
    fig, ax = plt.subplots(figsize=(6.5, 5))
    mesh = ax.pcolormesh(
        np.asarray(alphas), np.asarray(betas), np.asarray(entropy_grid).T, shading="auto"
    )
    fig.colorbar(mesh, ax=ax, label="entropy (nats)")
    ax.set_xlabel("alpha")
    ax.set_ylabel("beta")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
