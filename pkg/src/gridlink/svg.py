"""Deterministic SVG rendering of chains over their grids.

The output is a pure function of the chain and options: element order is
fixed, floats are printed through one ``%.12g``-style formatter, and nothing
depends on dict iteration order, so identical inputs give byte-identical
bytes.  The 12-digit decimal conversion happens here and only here — every
decision upstream of rendering stays exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chains import PolygonalChain
from .exact import Scalar


@dataclass(frozen=True, slots=True)
class RenderOptions:
    scale: int = 32  # pixels per grid unit
    margin: Fraction = Fraction(1)  # grid units of padding around the bounds
    stroke: str = "#1a1a8c"
    stroke_width: float = 2.0
    node_fill: str = "#222222"
    node_radius: float = 3.5
    steiner_radius: float = 4.5


def _fmt(x: float) -> str:
    out = format(x, ".12g")
    return "0" if out == "-0" else out


def render_svg(chain: PolygonalChain, options: RenderOptions | None = None) -> str:
    opt = options or RenderOptions()
    n = chain.n
    xs = [v.x for v in chain.vertices] + [Scalar(0), Scalar(n - 1)]
    ys = [v.y for v in chain.vertices] + [Scalar(0), Scalar(n - 1)]
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    margin = Scalar(opt.margin)
    scale = Scalar(opt.scale)

    def sx(x: Scalar) -> float:
        return float((x - min_x + margin) * scale)

    def sy(y: Scalar) -> float:
        return float((max_y - y + margin) * scale)

    width = float((max_x - min_x + margin * 2) * scale)
    height = float((max_y - min_y + margin * 2) * scale)

    parts: list[str] = []
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">'
    )
    parts.append(f'<rect width="{_fmt(width)}" height="{_fmt(height)}" fill="#ffffff"/>')

    # grid nodes, lexicographic order
    for gx in range(n):
        for gy in range(n):
            parts.append(
                f'<circle cx="{_fmt(sx(Scalar(gx)))}" cy="{_fmt(sy(Scalar(gy)))}" '
                f'r="{_fmt(opt.node_radius)}" fill="{opt.node_fill}"/>'
            )

    points = " ".join(f"{_fmt(sx(v.x))},{_fmt(sy(v.y))}" for v in chain.vertices)
    parts.append(
        f'<polyline points="{points}" fill="none" stroke="{opt.stroke}" '
        f'stroke-width="{_fmt(opt.stroke_width)}" stroke-linejoin="round"/>'
    )

    # arrowhead on the final edge
    tail, tip = chain.vertices[-2], chain.vertices[-1]
    dx = sx(tip.x) - sx(tail.x)
    dy = sy(tip.y) - sy(tail.y)
    norm = (dx * dx + dy * dy) ** 0.5
    if norm > 0:
        ux, uy = dx / norm, dy / norm
        px, py = -uy, ux
        bx, by = sx(tip.x) - 12 * ux, sy(tip.y) - 12 * uy
        pts = (
            f"{_fmt(sx(tip.x))},{_fmt(sy(tip.y))} "
            f"{_fmt(bx + 5 * px)},{_fmt(by + 5 * py)} "
            f"{_fmt(bx - 5 * px)},{_fmt(by - 5 * py)}"
        )
        parts.append(f'<polygon points="{pts}" fill="{opt.stroke}"/>')

    # chain vertices off the grid lattice drawn hollow
    for v in chain.vertices:
        if v.is_lattice():
            x, y = v.lattice()
            if 0 <= x < n and 0 <= y < n:
                continue
        parts.append(
            f'<circle cx="{_fmt(sx(v.x))}" cy="{_fmt(sy(v.y))}" '
            f'r="{_fmt(opt.steiner_radius)}" fill="#ffffff" '
            f'stroke="{opt.stroke}" stroke-width="1.5"/>'
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
