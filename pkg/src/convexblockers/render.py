"""Deterministic SVG rendering of edge sets and paths on the 2m-gon.

Vertices sit on a regular polygon inside a fixed 512x512 viewBox, vertex 0 at
the top, labels advancing with the drawing angle. Output is a pure function
of the RenderSpec: same spec, same bytes. Styles are a small named palette so
composite figures (a blocker over a dotted background, a bold witness path)
stay legible in black and white.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import Context, Edge, SimplePath, direction

__all__ = ["Layer", "RenderSpec", "STYLES", "render_svg"]

SIZE = 512
CENTER = SIZE / 2
RADIUS = 210.0
LABEL_RADIUS = RADIUS + 22.0

STYLES = {
    "solid": 'stroke="#000000" stroke-width="2"',
    "bold": 'stroke="#000000" stroke-width="4"',
    "dotted": 'stroke="#888888" stroke-width="1" stroke-dasharray="2,4"',
    "punctured": 'stroke="#000000" stroke-width="2" stroke-dasharray="8,5"',
}


@dataclass(frozen=True)
class Layer:
    """One drawable: an edge set or a path, with a named style."""

    content: frozenset | SimplePath
    style: str = "solid"
    label: str | None = None


@dataclass(frozen=True)
class RenderSpec:
    m: int
    layers: tuple[Layer, ...]
    show_labels: bool = True
    highlight_angles: bool = False


def _vertex_xy(v: int, n: int, radius: float) -> tuple[float, float]:
    theta = -math.pi / 2 + 2 * math.pi * v / n
    return CENTER + radius * math.cos(theta), CENTER + radius * math.sin(theta)


def _layer_edges(layer: Layer) -> list[Edge]:
    if isinstance(layer.content, SimplePath):
        return list(layer.content.edges())
    return sorted(layer.content)


def render_svg(spec: RenderSpec) -> str:
    """Render a RenderSpec to an SVG 1.1 document string."""
    ctx = Context(spec.m)
    n = ctx.n
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect width="{SIZE}" height="{SIZE}" fill="#ffffff"/>',
    ]

    for li, layer in enumerate(spec.layers):
        if layer.style not in STYLES:
            raise ValueError(f"unknown style {layer.style!r}, expected one of {sorted(STYLES)}")
        edges = _layer_edges(layer)
        for e in edges:
            if not (0 <= e.a < n and 0 <= e.b < n):
                raise ValueError(f"layer {li} uses vertex labels outside 0..{n - 1}; mixed m?")
        if isinstance(layer.content, SimplePath):
            for v in layer.content.vertices:
                ctx.check_vertex(v)
        out.append(f"<g>{'' if layer.label is None else f'<title>{layer.label}</title>'}")
        for e in edges:
            x1, y1 = _vertex_xy(e.a, n, RADIUS)
            x2, y2 = _vertex_xy(e.b, n, RADIUS)
            out.append(
                f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" {STYLES[layer.style]}/>'
            )
            if spec.highlight_angles:
                mx, my = (x1 + x2) / 2, (y1 + y2) / 2
                out.append(
                    f'<text x="{mx:.2f}" y="{my:.2f}" font-size="9" fill="#cc0000" '
                    f'text-anchor="middle">{direction(e, ctx)}</text>'
                )
        out.append("</g>")

    for v in range(n):
        x, y = _vertex_xy(v, n, RADIUS)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3.5" fill="#000000"/>')
        if spec.show_labels:
            lx, ly = _vertex_xy(v, n, LABEL_RADIUS)
            out.append(
                f'<text x="{lx:.2f}" y="{ly:.2f}" font-size="14" text-anchor="middle" '
                f'dominant-baseline="middle">{v}</text>'
            )

    legend_y = 18
    for layer in spec.layers:
        if layer.label:
            out.append(f'<text x="10" y="{legend_y}" font-size="12">{layer.label} ({layer.style})</text>')
            legend_y += 16

    out.append("</svg>")
    return "\n".join(out) + "\n"
