"""Figure rendering for report outputs. Imported lazily so the codec never needs matplotlib."""

from __future__ import annotations

from matplotlib.figure import Figure


def plot_bifurcation(pairs, path, b=None, dpi=150):
    """Scatter the (a, x) pairs of a bifurcation sweep and save to ``path``."""
    fig = Figure(figsize=(8, 5))
    ax = fig.add_subplot(111)
    if pairs:
        a, x = zip(*pairs)
        ax.plot(a, x, ",k", alpha=0.3)
    ax.set_xlabel("a")
    ax.set_ylabel("x")
    title = "Hénon map bifurcation diagram"
    if b is not None:
        title += f" (b = {b:g})"
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
