"""Static SVG rendering of Newton polygons.

Integer lattice at 20 px per unit, compact facets stroked as one path
(id "newton-polygon", one "M x y" plus an "L x y" per further vertex),
unbounded facets dashed, vertices dotted and labeled.  The path uses
exact integer pixel coordinates so tests can parse the vertex list back
out of the emitted path data.
"""

from __future__ import annotations

from lctkit.newton import NewtonPolygon

CELL = 20
MARGIN = 40


def polygon_svg(polygon: NewtonPolygon, title: str = "") -> str:
    span_x = max(p[0] for p in polygon.vertices) + 2
    span_y = max(p[1] for p in polygon.vertices) + 2
    width = 2 * MARGIN + CELL * span_x
    height = 2 * MARGIN + CELL * span_y

    def px(point):
        return MARGIN + CELL * point[0], height - MARGIN - CELL * point[1]

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>{title or 'Newton polygon'}</title>",
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for i in range(span_x + 1):
        x = MARGIN + CELL * i
        parts.append(
            f'<line x1="{x}" y1="{MARGIN}" x2="{x}" y2="{height - MARGIN}" '
            'stroke="#dddddd" stroke-width="1"/>'
        )
    for j in range(span_y + 1):
        y = height - MARGIN - CELL * j
        parts.append(
            f'<line x1="{MARGIN}" y1="{y}" x2="{width - MARGIN}" y2="{y}" '
            'stroke="#dddddd" stroke-width="1"/>'
        )
    origin = px((0, 0))
    parts.append(
        f'<line x1="{origin[0]}" y1="{origin[1]}" x2="{width - MARGIN}" '
        f'y2="{origin[1]}" stroke="black" stroke-width="2"/>'
    )
    parts.append(
        f'<line x1="{origin[0]}" y1="{origin[1]}" x2="{origin[0]}" '
        f'y2="{MARGIN}" stroke="black" stroke-width="2"/>'
    )

    first, last = polygon.vertices[0], polygon.vertices[-1]
    fx, fy = px(first)
    lx, ly = px(last)
    parts.append(
        f'<line x1="{fx}" y1="{fy}" x2="{fx}" y2="{MARGIN}" '
        'stroke="#4466cc" stroke-width="2" stroke-dasharray="6 4"/>'
    )
    parts.append(
        f'<line x1="{lx}" y1="{ly}" x2="{width - MARGIN}" y2="{ly}" '
        'stroke="#4466cc" stroke-width="2" stroke-dasharray="6 4"/>'
    )

    coords = [px(p) for p in polygon.vertices]
    d = "M " + " L ".join(f"{x} {y}" for x, y in coords)
    parts.append(
        f'<path id="newton-polygon" d="{d}" fill="none" '
        'stroke="#cc3333" stroke-width="3"/>'
    )
    for (vx, vy), (cx, cy) in zip(polygon.vertices, coords):
        parts.append(f'<circle cx="{cx}" cy="{cy}" r="4" fill="black"/>')
        parts.append(
            f'<text x="{cx + 6}" y="{cy - 6}" font-size="12" '
            f'font-family="monospace">({vx},{vy})</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts)


def path_vertices(svg_text: str, origin_height: int | None = None):
    """Recover the lattice vertices from the emitted path (test support)."""
    import re

    m = re.search(r'id="newton-polygon" d="([^"]+)"', svg_text)
    if m is None:
        raise ValueError("no newton-polygon path in SVG")
    height = int(re.search(r'height="(\d+)"', svg_text).group(1))
    pairs = re.findall(r"(-?\d+) (-?\d+)", m.group(1))
    out = []
    for sx, sy in pairs:
        x = (int(sx) - MARGIN) // CELL
        y = (height - MARGIN - int(sy)) // CELL
        out.append((x, y))
    return out


__all__ = ["CELL", "MARGIN", "path_vertices", "polygon_svg"]
