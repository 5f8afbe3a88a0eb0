"""Matplotlib rendering of embeddings and tilings.

Vertices are placed by a Tutte layout: the chosen outer face is pinned to a
regular polygon and every interior vertex sits at the barycentre of its
neighbours, which is crossing-free for 3-connected planar graphs.  Abandoned
edges are drawn as doubled orange lines, matching their file-format meaning.
"""

from __future__ import annotations

import math

import numpy as np

from .embedding import Edge, Embedding
from .tiling import Tiling, Y

MPL_COLORS = {"r": "#d62728", "g": "#2ca02c", "b": "#1f77b4", "k": "#444444", Y: "#ff7f0e"}


def tutte_layout(e: Embedding, outer: tuple[int, ...] | None = None) -> dict[int, tuple[float, float]]:
    """Vertex positions with the outer cycle on a regular polygon."""
    if outer is None:
        outer = e.outer_facets[0] if e.outer_facets else max(
            e.trace_faces(), key=len
        )
    outer = tuple(outer)
    k = len(outer)
    pos = {}
    for i, v in enumerate(outer):
        ang = 2 * math.pi * i / k + math.pi / 2
        pos[v] = (math.cos(ang), math.sin(ang))
    inner = [v for v in range(e.vertex_count) if v not in pos]
    if inner:
        index = {v: i for i, v in enumerate(inner)}
        n = len(inner)
        a = np.zeros((n, n))
        bx = np.zeros(n)
        by = np.zeros(n)
        for v in inner:
            i = index[v]
            deg = e.degree(v)
            a[i, i] = deg
            for u in e.rotation[v]:
                if u in index:
                    a[i, index[u]] -= 1
                else:
                    bx[i] += pos[u][0]
                    by[i] += pos[u][1]
        xs = np.linalg.solve(a, bx)
        ys = np.linalg.solve(a, by)
        for v in inner:
            pos[v] = (float(xs[index[v]]), float(ys[index[v]]))
    return pos


def draw_tiling(
    t: Tiling,
    ax=None,
    outer: tuple[int, ...] | None = None,
    highlight: set[Edge] = frozenset(),
    title: str | None = None,
):
    """Draw one tiling onto an axes (created on demand)."""
    import matplotlib.pyplot as plt

    if ax is None:
        _, ax = plt.subplots(figsize=(4.5, 4.5))
    pos = tutte_layout(t.base, outer)
    for (u, v), c in sorted(t.colors.items()):
        x = [pos[u][0], pos[v][0]]
        y = [pos[u][1], pos[v][1]]
        wide = 2.6 if (u, v) in highlight else 1.4
        if c == Y:
            # doubled line: two parallel strokes
            dx, dy = x[1] - x[0], y[1] - y[0]
            norm = math.hypot(dx, dy) or 1.0
            ox, oy = -dy / norm * 0.012, dx / norm * 0.012
            ax.plot([x[0] + ox, x[1] + ox], [y[0] + oy, y[1] + oy],
                    color=MPL_COLORS[Y], lw=wide)
            ax.plot([x[0] - ox, x[1] - ox], [y[0] - oy, y[1] - oy],
                    color=MPL_COLORS[Y], lw=wide)
        else:
            ax.plot(x, y, color=MPL_COLORS[c], lw=wide)
    xs = [p[0] for p in pos.values()]
    ys = [p[1] for p in pos.values()]
    ax.scatter(xs, ys, s=36, zorder=3, color="white", edgecolors="black", lw=0.8)
    for v, (x, y) in pos.items():
        ax.annotate(str(v), (x, y), ha="center", va="center", fontsize=6, zorder=4)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=9)
    return ax


def save_tiling_figure(t: Tiling, path: str, **kw) -> str:
    import matplotlib
    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    draw_tiling(t, ax=ax, **kw)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_embedding_figure(e: Embedding, path: str, title: str | None = None) -> str:
    from .tiling import Tiling as _T, K

    colors = {edge: K for edge in e.edges}
    t = _T.make(e, "single:r", {**colors})
    return save_tiling_figure(t, path, title=title)
