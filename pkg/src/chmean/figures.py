"""Matplotlib rendering of sweeps and lognormal experiments to image files."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .geometry import LocusDescription
from .montecarlo import ExperimentResult
from .sweeps import SweepRow


def render_sweep(rows: list[SweepRow], locus: LocusDescription,
                 c1: complex, c2: complex, path: str) -> None:
    """Locus, atoms, origin, and swept means colored by theta."""
    fig, ax = plt.subplots(figsize=(6, 6))
    if locus.kind == "arc":
        o, r = locus.circle.center, locus.circle.radius
        ax.add_patch(plt.Circle((o.real, o.imag), r, fill=False,
                                color="tab:blue", lw=1.2, label="locus"))
    else:
        (e1, e2) = locus.endpoints
        style = dict(color="tab:blue", lw=1.2, label="locus")
        if locus.kind == "degenerate":
            style.update(ls="--", label="degenerate (line)")
        ax.plot([e1.real, e2.real], [e1.imag, e2.imag], **style)
    live = [(row.theta, row.h) for row in rows if row.h is not None]
    if live:
        thetas = [t for t, _ in live]
        hs = np.array([h for _, h in live])
        sc = ax.scatter(hs.real, hs.imag, c=thetas, cmap="viridis", s=30,
                        zorder=3, label="h(theta)")
        fig.colorbar(sc, ax=ax, label="theta", shrink=0.8)
    ax.plot([c1.real, c2.real], [c1.imag, c2.imag], "s", color="tab:red",
            ms=8, ls="none", label="atoms")
    ax.plot(0, 0, "+", color="tab:green", ms=12, mew=2, label="origin")
    ax.set_aspect("equal")
    ax.grid(True, alpha=0.3)
    ax.legend(loc="best", fontsize=8)
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    ax.set_title(f"two-point harmonic mean sweep: {c1}, {c2}")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def render_lognormal(result: ExperimentResult, samples: np.ndarray, path: str) -> None:
    """Cloud of exp(Z) draws with the target and both estimates marked."""
    fig, ax = plt.subplots(figsize=(6, 6))
    sub = samples[: min(len(samples), 4000)]
    ax.scatter(sub.real, sub.imag, s=2, alpha=0.2, color="tab:gray", label="exp(Z) draws")
    for value, marker, color, label in [
        (result.target, "*", "tab:green", "target e^mu"),
        (result.arith, "o", "tab:blue", "arithmetic mean"),
        (result.harm, "x", "tab:red", "harmonic mean"),
    ]:
        ax.plot(value.real, value.imag, marker, color=color, ms=10, mew=2,
                ls="none", label=label)
    ax.set_aspect("equal")
    ax.grid(True, alpha=0.3)
    ax.legend(loc="best", fontsize=8)
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    ax.set_title(f"lognormal experiment, n={result.n}")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
