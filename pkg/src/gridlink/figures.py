"""Raster figure output via matplotlib's Agg backend.

PNG rendering exists for report browsing (the sweep can drop one figure per
row next to its table); the byte-stability guarantees live in the SVG
renderer, not here.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .chains import PolygonalChain


def save_chain_png(
    chain: PolygonalChain, path: str | Path, title: str | None = None, dpi: int = 120
) -> Path:
    """Draw the chain over its grid and write a PNG; returns the path."""
    out = Path(path)
    n = chain.n
    fig, ax = plt.subplots(figsize=(5, 5))
    try:
        gx = [x for x in range(n) for _ in range(n)]
        gy = [y for _ in range(n) for y in range(n)]
        ax.scatter(gx, gy, s=28, color="#222222", zorder=3)
        vx = [float(v.x) for v in chain.vertices]
        vy = [float(v.y) for v in chain.vertices]
        ax.plot(vx, vy, color="#1a1a8c", linewidth=2, zorder=2)
        ax.annotate(
            "",
            xy=(vx[-1], vy[-1]),
            xytext=(vx[-2], vy[-2]),
            arrowprops=dict(arrowstyle="-|>", color="#1a1a8c", linewidth=2),
            zorder=4,
        )
        steiner = [
            v
            for v in chain.vertices
            if not (
                v.is_lattice()
                and 0 <= v.lattice()[0] < n
                and 0 <= v.lattice()[1] < n
            )
        ]
        if steiner:
            ax.scatter(
                [float(v.x) for v in steiner],
                [float(v.y) for v in steiner],
                s=50,
                facecolors="white",
                edgecolors="#1a1a8c",
                zorder=5,
            )
        if title:
            ax.set_title(title)
        ax.set_aspect("equal")
        ax.axis("off")
        fig.savefig(out, dpi=dpi, bbox_inches="tight")
    finally:
        plt.close(fig)
    return out
