"""Matplotlib rendering of embedded digraphs for the CLI report paths."""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import FancyArrowPatch

from .digraph import PlanarDigraph

_LABEL_COLORS = {"H": "#c0392b", "K": "#2471a3"}


def _positions(g: PlanarDigraph) -> dict[int, tuple[float, float]]:
    n = len(g.vertices)
    if n == 1:
        return {g.vertices[0]: (0.0, 0.0)}
    return {
        v: (math.cos(2 * math.pi * i / n + math.pi / 2),
            math.sin(2 * math.pi * i / n + math.pi / 2))
        for i, v in enumerate(g.vertices)
    }


def draw_digraph(g: PlanarDigraph, ax=None, title: str | None = None):
    "Draw vertices on a circle with curved parallel edges and loop arcs."
    if ax is None:
        _, ax = plt.subplots(figsize=(4, 4))
    pos = _positions(g)
    parallel: dict[tuple[int, int], list[int]] = {}
    for e in sorted(g.edges):
        t, h = g.edges[e]
        parallel.setdefault((min(t, h), max(t, h)), []).append(e)
    for pair, group in parallel.items():
        for k, e in enumerate(group):
            t, h = g.edges[e]
            color = _LABEL_COLORS.get(g.labels.get(e, ""), "#333333")
            if t == h:
                x, y = pos[t]
                r = 0.18 + 0.1 * k
                theta = 0.8 * k
                cx, cy = x + r * math.cos(theta), y + r * math.sin(theta)
                ax.add_patch(plt.Circle((cx, cy), r, fill=False, color=color, lw=1.2))
                continue
            rad = 0.0 if len(group) == 1 else -0.5 + k / (len(group) - 1)
            arrow = FancyArrowPatch(
                pos[t], pos[h], connectionstyle=f"arc3,rad={0.45 * rad:.3f}",
                arrowstyle="-|>", mutation_scale=14, color=color, lw=1.4,
                shrinkA=12, shrinkB=12,
            )
            ax.add_patch(arrow)
    for v, (x, y) in pos.items():
        ax.plot([x], [y], "o", ms=16, color="#f5f5f5", mec="#333333", zorder=3)
        ax.annotate(str(v), (x, y), ha="center", va="center", zorder=4, fontsize=9)
    if title:
        ax.set_title(title, fontsize=10)
    ax.set_xlim(-1.7, 1.7)
    ax.set_ylim(-1.7, 1.7)
    ax.set_aspect("equal")
    ax.axis("off")
    return ax


def save_digraph_figure(g: PlanarDigraph, path, title: str | None = None) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig, ax = plt.subplots(figsize=(4, 4))
    draw_digraph(g, ax=ax, title=title)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path
