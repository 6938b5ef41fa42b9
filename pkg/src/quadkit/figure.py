"""SVG rendering of a quadruple and its two triangle decompositions.

The drawing shows the quadrilateral outline, both diagonals, and the two
diagonal decompositions as translucent triangle pairs in two tones, so
the area bookkeeping behind the four-point identity is visible at a
glance.  Vertex labels and the exact signed areas are annotated.  Model
space is y-up; the emitter flips the y axis so counterclockwise triples
render conventionally.

Output is plain SVG 1.1 text with fixed two-decimal coordinates:
deterministic, diffable, and testable by substring.
"""

from __future__ import annotations

from .geometry import quad_signed_area
from .identities import QuadConfig, area_quadruple
from .scalar import format_scalar

TONE_BD = "#2a6fb0"  # triangles ABD and BCD (diagonal BD)
TONE_AC = "#2aa05a"  # triangles ACD and ABC (diagonal AC)

_HEADER = (
    '<?xml version="1.0" encoding="UTF-8"?>\n'
    '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
    'width="{w}" height="{h}" viewBox="0 0 {w} {h}">\n'
)


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def emit_svg(q: QuadConfig, width: float = 640.0) -> str:
    """Render one quadruple to an SVG document string."""
    ks = area_quadruple(q)
    k_quad = quad_signed_area(*q.points())

    xs = [float(p.x) for p in q.points()]
    ys = [float(p.y) for p in q.points()]
    span_x = max(xs) - min(xs)
    span_y = max(ys) - min(ys)
    extent = max(span_x, span_y, 1e-9)
    margin = 0.12 * extent
    scale = width / (extent + 2 * margin)
    height = (span_y + 2 * margin) * scale
    annotation_h = 110.0

    def place(p) -> tuple[float, float]:
        sx = (float(p.x) - min(xs) + margin) * scale
        sy = (max(ys) - float(p.y) + margin) * scale  # y-up model space
        return sx, sy

    pa, pb, pc, pd = (place(p) for p in q.points())

    def poly(points, fill, opacity) -> str:
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points)
        return (
            f'<polygon points="{coords}" fill="{fill}" '
            f'fill-opacity="{opacity}" stroke="none"/>\n'
        )

    def line(p1, p2, color, dash="4,3") -> str:
        return (
            f'<line x1="{_fmt(p1[0])}" y1="{_fmt(p1[1])}" '
            f'x2="{_fmt(p2[0])}" y2="{_fmt(p2[1])}" '
            f'stroke="{color}" stroke-width="1" '
            f'stroke-dasharray="{dash}"/>\n'
        )

    def label(p, text) -> str:
        return (
            f'<text x="{_fmt(p[0] + 6)}" y="{_fmt(p[1] - 6)}" '
            f'font-family="sans-serif" font-size="14">{text}</text>\n'
        )

    parts = [_HEADER.format(w=_fmt(width), h=_fmt(height + annotation_h))]
    parts.append(
        f'<rect x="0" y="0" width="{_fmt(width)}" '
        f'height="{_fmt(height + annotation_h)}" fill="white"/>\n'
    )
    # Diagonal-BD decomposition in one tone, diagonal-AC in the other;
    # the translucent overlap reproduces the four-region shading.
    parts.append(poly([pa, pb, pd], TONE_BD, "0.16"))
    parts.append(poly([pb, pc, pd], TONE_BD, "0.16"))
    parts.append(poly([pa, pc, pd], TONE_AC, "0.16"))
    parts.append(poly([pa, pb, pc], TONE_AC, "0.16"))
    parts.append(line(pb, pd, TONE_BD))
    parts.append(line(pa, pc, TONE_AC))
    outline = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (pa, pb, pc, pd))
    parts.append(
        f'<polygon points="{outline}" fill="none" '
        f'stroke="black" stroke-width="1.5"/>\n'
    )
    for p, name in ((pa, "A"), (pb, "B"), (pc, "C"), (pd, "D")):
        parts.append(label(p, name))

    annotations = (
        f"K[BCD] = {format_scalar(ks.k_bcd)}",
        f"K[ACD] = {format_scalar(ks.k_acd)}",
        f"K[ABD] = {format_scalar(ks.k_abd)}",
        f"K[ABC] = {format_scalar(ks.k_abc)}",
        f"K[ABCD] = {format_scalar(k_quad)}",
    )
    for i, text in enumerate(annotations):
        y = height + 20 + 18 * i
        parts.append(
            f'<text x="12" y="{_fmt(y)}" font-family="monospace" '
            f'font-size="13">{text}</text>\n'
        )
    parts.append("</svg>\n")
    return "".join(parts)
