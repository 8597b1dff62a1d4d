"""SVG rendering of planar frameworks.

Layout is cosmetic only: coordinates are converted to floats for drawing,
never for any mathematical decision. Output is deterministic for a given
input.
"""

from __future__ import annotations

from .framework import Framework, StressWeights

VIEW = 800
MARGIN_FRACTION = 0.05

_POSITIVE = "#c0392b"
_NEGATIVE = "#2471a3"
_ZERO = "#7f8c8d"
_PLAIN = "#444444"


class UnsupportedDimension(Exception):
    pass


def _edge_color(w) -> str:
    if w > 0:
        return _POSITIVE
    if w < 0:
        return _NEGATIVE
    return _ZERO


def render_framework_svg(fw: Framework, omega: StressWeights | None = None) -> str:
    """An 800x800 drawing with labeled vertices; edges are colored by the
    sign of their stress weight when one is supplied."""
    if fw.dim != 2:
        raise UnsupportedDimension(f"can only draw dimension 2, got {fw.dim}")
    xs = [float(p[0]) for p in fw.points]
    ys = [float(p[1]) for p in fw.points]
    margin = VIEW * MARGIN_FRACTION
    span = VIEW - 2 * margin
    width = max(xs) - min(xs)
    height = max(ys) - min(ys)
    scale = span / max(width, height)
    x_off = margin + (span - width * scale) / 2
    y_off = margin + (span - height * scale) / 2

    def place(v: int) -> tuple[float, float]:
        # SVG y grows downward; flip so the picture matches the plane.
        px = x_off + (xs[v - 1] - min(xs)) * scale
        py = VIEW - (y_off + (ys[v - 1] - min(ys)) * scale)
        return px, py

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{VIEW}" height="{VIEW}" '
        f'viewBox="0 0 {VIEW} {VIEW}">',
        f'<rect width="{VIEW}" height="{VIEW}" fill="white"/>',
    ]
    for u, v in fw.graph.edges:
        x1, y1 = place(u)
        x2, y2 = place(v)
        color = _edge_color(omega[(u, v)]) if omega is not None else _PLAIN
        lines.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
                     f'stroke="{color}" stroke-width="2"/>')
    for v in range(1, fw.n + 1):
        x, y = place(v)
        lines.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="7" '
                     f'fill="white" stroke="black" stroke-width="2"/>')
        lines.append(f'<text x="{x + 10:.2f}" y="{y - 10:.2f}" '
                     f'font-family="sans-serif" font-size="18">{v}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
