"""Deterministic SVG rendering: grid dots, solid curve, dashed path, markers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple

from .grid import EdgeSet, GridPoint
from .jsonio import Instance


@dataclass(frozen=True)
class RenderSpec:
    cell: int = 24
    margin: int = 24
    dot_radius: float = 1.5
    grid_color: str = "#c8c8c8"
    curve_color: str = "#1f4fd8"
    curve_width: float = 3.0
    path_color: str = "#d03030"
    path_width: float = 3.0
    path_dash: str = "7,5"
    side_color: str = "#222222"
    witness_color: str = "#0a8a0a"
    witness_radius: float = 6.0


def _fmt(v: float) -> str:
    s = f"{v:.2f}"
    return s.rstrip("0").rstrip(".") if "." in s else s


def _edges_of(payload) -> Iterable[Tuple[GridPoint, GridPoint]]:
    if payload is None:
        return []
    if isinstance(payload, EdgeSet):
        return [(e.a, e.b) for e in payload.sorted_edges()]
    return [(e.src, e.dst) for e in payload.edges]


def render_svg(inst: Instance, spec: RenderSpec = None, witnesses=()) -> str:
    """SVG document for an instance; byte-identical for identical inputs."""
    spec = spec or RenderSpec()
    n = inst.n
    size = 2 * spec.margin + n * spec.cell

    def sx(x: int) -> float:
        return spec.margin + x * spec.cell

    def sy(y: int) -> float:
        return spec.margin + (n - y) * spec.cell

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    for y in range(n + 1):
        for x in range(n + 1):
            parts.append(f'<circle cx="{_fmt(sx(x))}" cy="{_fmt(sy(y))}" '
                         f'r="{_fmt(spec.dot_radius)}" fill="{spec.grid_color}"/>')
    for a, b in _edges_of(inst.blue):
        parts.append(f'<line x1="{_fmt(sx(a.x))}" y1="{_fmt(sy(a.y))}" '
                     f'x2="{_fmt(sx(b.x))}" y2="{_fmt(sy(b.y))}" '
                     f'stroke="{spec.curve_color}" stroke-width="{_fmt(spec.curve_width)}" '
                     f'stroke-linecap="round"/>')
    for a, b in _edges_of(inst.red):
        parts.append(f'<line x1="{_fmt(sx(a.x))}" y1="{_fmt(sy(a.y))}" '
                     f'x2="{_fmt(sx(b.x))}" y2="{_fmt(sy(b.y))}" '
                     f'stroke="{spec.path_color}" stroke-width="{_fmt(spec.path_width)}" '
                     f'stroke-dasharray="{spec.path_dash}" stroke-linecap="round"/>')
    if inst.sides is not None:
        for label, p in (("p1", inst.sides.p1), ("p2", inst.sides.p2)):
            parts.append(f'<circle cx="{_fmt(sx(p.x))}" cy="{_fmt(sy(p.y))}" r="4" '
                         f'fill="{spec.side_color}"/>')
            parts.append(f'<text x="{_fmt(sx(p.x) + 6)}" y="{_fmt(sy(p.y) - 6)}" '
                         f'font-size="12" fill="{spec.side_color}">{label}</text>')
    for w in witnesses:
        p = GridPoint(*w)
        parts.append(f'<circle cx="{_fmt(sx(p.x))}" cy="{_fmt(sy(p.y))}" '
                     f'r="{_fmt(spec.witness_radius)}" fill="none" '
                     f'stroke="{spec.witness_color}" stroke-width="2"/>')
        parts.append(f'<text x="{_fmt(sx(p.x) + 8)}" y="{_fmt(sy(p.y) + 4)}" '
                     f'font-size="12" fill="{spec.witness_color}">x</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
