"""
Figures written next to the textual reports: the Hasse diagram of a lattice
with elements colored by dimension, and the growth of the stage chains.
"""

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

RCPARAMS = {
    "figure.dpi": 120,
    "savefig.bbox": "tight",
    "font.size": 9,
    "axes.grid": True,
    "grid.color": "lightgray",
    "grid.linewidth": 0.5,
}


def hasse_layout(lattice):
    """Element positions: height is the rank, each rank row is centered."""
    layers = {}
    for x in lattice.elements:
        layers.setdefault(lattice.rank(x), []).append(x)
    pos = {}
    for rank, row in layers.items():
        row.sort(key=lambda x: lattice.names[x])
        width = len(row)
        for i, x in enumerate(row):
            pos[x] = (i - (width - 1) / 2.0, rank)
    return pos


def plot_hasse(lattice, path, dimensions=None):
    """
    Draw the cover relation. With a dimension table, each element ``x`` is
    colored by the dimension of ``[bottom, x]``.
    """
    pos = hasse_layout(lattice)
    with plt.rc_context(RCPARAMS):
        width = max(3.0, 0.6 * max(abs(p[0]) for p in pos.values()) * 2 + 2)
        height = max(2.5, 0.8 * (max(p[1] for p in pos.values()) + 1))
        fig, ax = plt.subplots(figsize=(width, height))
        for lo, hi in lattice.covers:
            (x0, y0), (x1, y1) = pos[lo], pos[hi]
            ax.plot([x0, x1], [y0, y1], color="gray", linewidth=1, zorder=1)
        if dimensions is not None:
            colors = [dimensions[(lattice.bottom, x)] for x in lattice.elements]
        else:
            colors = [0] * lattice.size
        xs = [pos[x][0] for x in lattice.elements]
        ys = [pos[x][1] for x in lattice.elements]
        sc = ax.scatter(xs, ys, c=colors, cmap="viridis", s=260, zorder=2,
                        edgecolors="black", vmin=0, vmax=max(1, max(colors)))
        for x in lattice.elements:
            ax.annotate(lattice.names[x], pos[x], ha="center", va="center",
                        fontsize=7, color="white", zorder=3)
        if dimensions is not None:
            fig.colorbar(sc, ax=ax, label="dimension of [bottom, x]", ticks=range(max(colors) + 1))
        ax.set_title(f"{lattice.name}: {lattice.size} elements, {len(lattice.covers)} covers")
        ax.set_axis_off()
        fig.savefig(path)
        plt.close(fig)
    return path


def plot_stages(lattice, path, filtration, chains=None):
    """Stage sizes of the filtration and, if given, of both construction chains."""
    with plt.rc_context(RCPARAMS):
        fig, ax = plt.subplots(figsize=(4.5, 3))
        ks = range(len(filtration.stages))
        ax.plot(ks, [len(s) for s in filtration.stages], marker="o", label="Gabriel filtration")
        if chains is not None:
            ax.plot(range(len(chains.L)), [len(s) for s in chains.L], marker="x",
                    linestyle="--", label="construction L")
            ax.plot(range(len(chains.D)), [len(s) for s in chains.D], marker="s",
                    linestyle=":", label="construction D")
        ax.set_xlabel("stage index")
        ax.set_ylabel("intervals in stage")
        ax.set_xticks(list(ks))
        ax.set_title(lattice.name)
        ax.legend(loc="lower right")
        fig.savefig(path)
        plt.close(fig)
    return path


def write_figures(directory, lattice, filtration, chains=None, dimensions=None):
    """Write the Hasse and stage figures into ``directory``; returns the paths."""
    os.makedirs(directory, exist_ok=True)
    base = os.path.join(directory, lattice.name)
    return [
        plot_hasse(lattice, base + "_hasse.png", dimensions),
        plot_stages(lattice, base + "_stages.png", filtration, chains),
    ]
