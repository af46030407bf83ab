"""Matplotlib figures for the report command (PNG files)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .trajectory import Folding, TrajectoryDiagram  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
}


def _save(fig, path):
    fig.tight_layout()
    # drop the Software tag so bytes do not depend on the matplotlib version
    fig.savefig(path, metadata={"Software": None})
    plt.close(fig)
    return path


def plot_folding(f: Folding, path, title=None):
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(max(3.0, 0.35 * f.n + 1), 0.5 * f.k + 1.5))
        xs = range(f.n + 1)
        ax.plot(xs, f.heights, "-o", color="black", ms=3, lw=1)
        for x in range(f.n):
            if f.heights[x] == f.heights[x + 1]:
                ax.plot([x, x + 1], [f.heights[x]] * 2, color="#c0392b", lw=3)
        ax.set_yticks(range(f.k + 1))
        ax.set_xlabel("element")
        ax.set_ylabel("height")
        if title:
            ax.set_title(title)
        return _save(fig, path)


def plot_trajectory(d: TrajectoryDiagram, path, title=None):
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(0.6 * d.l + 1.5, 0.6 * d.k + 1.2))
        ax.add_patch(plt.Rectangle((0, 0), d.l, d.k, fill=False, lw=1))
        xs, ys = zip(*d.points)
        ax.plot(xs, ys, color="#1f4e99", lw=1.2)
        labels: dict = {}
        for x, p in enumerate(d.points):
            labels.setdefault(p, []).append(str(x))
        for (px, py), names in labels.items():
            ax.annotate(",".join(names), (px, py), fontsize=6, ha="center",
                        xytext=(0, 4), textcoords="offset points")
        for c in d.crossings:
            cx, cy = (float(v) for v in c.point)
            ax.plot(cx, cy, "o", ms=5, mec="black", mfc="black" if c.integral else "white")
        for b in d.bounces:
            if b.is_rest:
                ax.plot(b.point2[0] / 2, b.point2[1] / 2, "s", ms=4, color="#c0392b")
        ax.set_xlim(-0.5, d.l + 0.5)
        ax.set_ylim(-0.5, d.k + 0.5)
        ax.set_aspect("equal")
        if title:
            ax.set_title(title)
        return _save(fig, path)


def plot_counts(ns, counts, path):
    """Number of congruences of L_n against n, on a log scale."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4, 3))
        ax.semilogy(ns, counts, "o-", color="black", ms=3)
        ax.set_xlabel("n")
        ax.set_ylabel("|Con L_n|")
        return _save(fig, path)


def plot_frequency_histogram(freqs: dict, path, n: int):
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4, 3))
        keys = sorted(freqs)
        ax.bar([str(k) for k in keys], [freqs[k] for k in keys], color="#777777")
        ax.set_xlabel("frequency")
        ax.set_ylabel(f"congruences of L_{n}")
        return _save(fig, path)
