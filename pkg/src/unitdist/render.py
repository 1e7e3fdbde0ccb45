"""Deterministic SVG rendering of drawings and point-circle structures.

Output is a small SVG 1.1 subset (line, circle, text).  Coordinates are
written with a fixed 6-decimal format and elements in a fixed order
(edges, then vertices, then labels), so identical inputs give
byte-identical documents.  The y axis is flipped: SVG y grows downward,
drawings keep the usual mathematical orientation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .configuration import IncidenceStructure
from .layout import Drawing


@dataclass(frozen=True)
class RenderStyle:
    scale: float = 120.0          # pixels per unit length
    margin: float = 40.0          # pixels around the bounding box
    vertex_radius: float = 4.0    # pixels
    show_labels: bool = True
    edge_width: float = 1.5
    circle_width: float = 1.5
    edge_color: str = "#37474f"
    vertex_color: str = "#c62828"
    circle_color: str = "#1565c0"
    label_color: str = "#212121"
    font_size: float = 11.0

    def __post_init__(self):
        if self.scale <= 0:
            raise ValueError("scale must be positive")
        if self.margin < 0:
            raise ValueError("margin must be non-negative")


def _fmt(value: float) -> str:
    text = f"{value:.6f}"
    return "0.000000" if text == "-0.000000" else text


class _Canvas:
    """Maps math coordinates to SVG pixels (y flipped) and collects elements."""

    def __init__(self, xs, ys, pad_units: float, style: RenderStyle):
        if xs:
            self.xmin, xmax = min(xs) - pad_units, max(xs) + pad_units
            self.ymin, ymax = min(ys) - pad_units, max(ys) + pad_units
        else:
            self.xmin = xmax = self.ymin = ymax = 0.0
        self.style = style
        self.width = (xmax - self.xmin) * style.scale + 2 * style.margin
        self.height = (ymax - self.ymin) * style.scale + 2 * style.margin
        self.ymax = ymax
        self.body: list[str] = []

    def to_px(self, pt) -> tuple[float, float]:
        s, m = self.style.scale, self.style.margin
        return ((pt[0] - self.xmin) * s + m, (self.ymax - pt[1]) * s + m)

    def line(self, a, b) -> None:
        (x1, y1), (x2, y2) = self.to_px(a), self.to_px(b)
        self.body.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" '
            f'y2="{_fmt(y2)}" stroke="{self.style.edge_color}" '
            f'stroke-width="{_fmt(self.style.edge_width)}" />')

    def disc(self, center, radius_px: float, color: str) -> None:
        cx, cy = self.to_px(center)
        self.body.append(
            f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(radius_px)}" '
            f'fill="{color}" />')

    def ring(self, center, radius_px: float) -> None:
        cx, cy = self.to_px(center)
        self.body.append(
            f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(radius_px)}" '
            f'fill="none" stroke="{self.style.circle_color}" '
            f'stroke-width="{_fmt(self.style.circle_width)}" />')

    def label(self, center, text: str) -> None:
        cx, cy = self.to_px(center)
        offset = self.style.vertex_radius + 3.0
        self.body.append(
            f'<text x="{_fmt(cx + offset)}" y="{_fmt(cy - offset)}" '
            f'fill="{self.style.label_color}" '
            f'font-size="{_fmt(self.style.font_size)}" '
            f'font-family="sans-serif">{text}</text>')

    def document(self) -> str:
        head = (
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{_fmt(self.width)}" height="{_fmt(self.height)}" '
            f'viewBox="0 0 {_fmt(self.width)} {_fmt(self.height)}">')
        return "\n".join([head, *self.body, "</svg>"]) + "\n"


def render_drawing(d: Drawing, style: RenderStyle = RenderStyle()) -> str:
    """SVG for a drawing: edges as lines, vertices as discs, optional labels."""
    xs = [p[0] for p in d.positions]
    ys = [p[1] for p in d.positions]
    canvas = _Canvas(xs, ys, 0.0, style)
    for u, v in d.graph.edges:  # already sorted
        canvas.line(d.positions[u], d.positions[v])
    for v in range(d.graph.n_vertices):
        canvas.disc(d.positions[v], style.vertex_radius, style.vertex_color)
    if style.show_labels:
        for v in range(d.graph.n_vertices):
            canvas.label(d.positions[v], str(v))
    return canvas.document()


def render_configuration(s: IncidenceStructure,
                         style: RenderStyle = RenderStyle()) -> str:
    """SVG for a point-circle structure: unit rings plus point discs."""
    for circle in s.circles:
        if circle.radius != 1.0:
            raise ValueError("render_configuration requires unit radii")
    xs = [p[0] for p in s.points] + [c.center[0] for c in s.circles]
    ys = [p[1] for p in s.points] + [c.center[1] for c in s.circles]
    # pad by the unit radius so rings stay inside the canvas
    canvas = _Canvas(xs, ys, 1.0 if s.circles else 0.0, style)
    for circle in s.circles:
        canvas.ring(circle.center, style.scale)
    for pt in s.points:
        canvas.disc(pt, style.vertex_radius, style.vertex_color)
    if style.show_labels:
        for j, circle in enumerate(s.circles):
            canvas.label(circle.center, str(s.circle_labels[j]))
        for i, pt in enumerate(s.points):
            canvas.label(pt, str(s.point_labels[i]))
    return canvas.document()
