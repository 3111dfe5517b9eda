"""Headless figure rendering for the CLI report path.

Every function takes plain arrays plus an output stem, writes PNG files
next to the delimited data, and returns the paths written.  The Agg
backend is forced so the CLI works without a display.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

__all__ = [
    "save_deuteron_plots",
    "save_diffraction_plots",
    "save_spectral_plots",
]

_DPI = 110


def _finish(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
    return path


def save_deuteron_plots(stem, times, centers, snapshot_times, z_grid,
                        snapshot_densities, amplitude, period):
    """Center trajectory plus axial density snapshots.

    snapshot_densities is one row per snapshot time, sampled on z_grid.
    """
    paths = []

    fig, ax = plt.subplots(figsize=(6.4, 3.8))
    ax.plot(times, centers, color="tab:blue", lw=1.6)
    ax.axhline(-amplitude, color="tab:gray", ls="--", lw=0.9,
               label="turning point")
    ax.axvline(period, color="tab:gray", ls=":", lw=0.9, label="period")
    ax.set_xlabel("t")
    ax.set_ylabel("density-center z")
    ax.set_title("Relative-density center after the field quench")
    ax.legend(loc="upper right", fontsize=8)
    paths.append(_finish(fig, f"{stem}_trajectory.png"))

    fig, ax = plt.subplots(figsize=(6.4, 3.8))
    for t, row in zip(snapshot_times, snapshot_densities):
        ax.plot(z_grid, row, lw=1.4, label=f"t = {t:.3g}")
    ax.set_xlabel("z")
    ax.set_ylabel("density on the field axis")
    ax.set_title("Axial density slices")
    ax.legend(fontsize=8)
    paths.append(_finish(fig, f"{stem}_density.png"))
    return paths


def save_diffraction_plots(stem, x, density, wavefront, cornu_c, cornu_s):
    """Transient density profile and the Cornu spiral behind it."""
    paths = []

    fig, ax = plt.subplots(figsize=(6.4, 3.8))
    ax.plot(x, density, color="tab:blue", lw=1.4)
    ax.axvline(wavefront, color="tab:gray", ls="--", lw=0.9,
               label="classical wavefront")
    ax.axhline(0.25, color="tab:red", ls=":", lw=0.9, label="quarter point")
    ax.set_xlabel("x")
    ax.set_ylabel("density")
    ax.set_title("Diffraction in time after shutter release")
    ax.legend(loc="upper right", fontsize=8)
    paths.append(_finish(fig, f"{stem}_density.png"))

    fig, ax = plt.subplots(figsize=(4.6, 4.6))
    ax.plot(cornu_c, cornu_s, color="tab:blue", lw=1.0)
    ax.plot([-0.5, 0.5], [-0.5, 0.5], "o", color="tab:red", ms=4,
            label="spiral eyes")
    ax.set_xlabel("C(u)")
    ax.set_ylabel("S(u)")
    ax.set_aspect("equal")
    ax.set_title("Cornu spiral")
    ax.legend(fontsize=8)
    paths.append(_finish(fig, f"{stem}_cornu.png"))
    return paths


def save_spectral_plots(stem, times, survival, expect_x, conv_sizes=None,
                        conv_errors=None):
    """Survival and position dynamics, plus the truncation-convergence curve
    when a convergence table was computed."""
    paths = []

    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(6.4, 5.2), sharex=True)
    ax1.plot(times, survival, color="tab:blue", lw=1.4)
    ax1.set_ylabel("survival probability")
    ax1.set_title("Spectral-method quench dynamics")
    ax2.plot(times, expect_x, color="tab:orange", lw=1.4)
    ax2.set_xlabel("t")
    ax2.set_ylabel("<x>")
    paths.append(_finish(fig, f"{stem}_dynamics.png"))

    if conv_sizes is not None and len(conv_sizes) > 1:
        fig, ax = plt.subplots(figsize=(5.2, 3.8))
        floor = 1e-16
        ax.loglog(conv_sizes, np.maximum(conv_errors, floor), "o-",
                  color="tab:blue")
        ax.set_xlabel("basis size N")
        ax.set_ylabel("max |<x> - closed form|")
        ax.set_title("Truncation convergence")
        ax.grid(True, which="both", alpha=0.3)
        paths.append(_finish(fig, f"{stem}_convergence.png"))
    return paths
