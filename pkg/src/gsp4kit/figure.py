"""Pictures of the (c1, c2) plane for fixed (k1, k2).

Every bound h in the six inequalities has the parity of k1 + k2, and so
does u*c1 + v*c2 at a valid lattice point. Hence u*c1 + v*c2 <= h and
u*c1 + v*c2 <= h + 1 pick out the same points, and each region is drawn as
the exact polygon cut out by the shifted lines u*c1 + v*c2 = h + 1. Those
polygons tile the plane with every valid point strictly inside its own
region. When k2 = 2 the shifted A- and B-lines coincide and b, b', d, d', e
have zero area, so they are dropped.
"""

from __future__ import annotations

from fractions import Fraction
from html import escape

from .weights import LABELS, SIGNATURE_OF, Weights, classify

Point = tuple[Fraction, Fraction]

COLOURS = {
    "a": "#d9e7f5",
    "a'": "#c6dbef",
    "b": "#fdd0a2",
    "b'": "#fdae6b",
    "c": "#c7e9c0",
    "d": "#dadaeb",
    "d'": "#bcbddc",
    "e": "#fcbba1",
    "f": "#e5f5e0",
}

ASCII_MARK = {"a": "a", "a'": "A", "b": "b", "b'": "B", "c": "c", "d": "d", "d'": "D", "e": "e", "f": "f"}


def _half_planes(k1: int, k2: int, label: str) -> list[tuple[int, int, int]]:
    """(u, v, h) meaning u*c1 + v*c2 <= h, using the shifted boundary lines."""
    base = [
        (-1, 1, k1 + k2 - 4),
        (1, -1, k1 + k2 - 4),
        (1, 1, k1 + k2 - 2),
        (-1, 1, k1 - k2),
        (1, -1, k1 - k2),
        (1, 1, k1 - k2 + 2),
    ]
    out = []
    for (u, v, h), holds in zip(base, SIGNATURE_OF[label]):
        out.append((u, v, h + 1) if holds else (-u, -v, -h - 1))
    return out


def _clip(poly: list[Point], u: int, v: int, h: int) -> list[Point]:
    out: list[Point] = []
    n = len(poly)
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        fp = u * p[0] + v * p[1] - h
        fq = u * q[0] + v * q[1] - h
        if fp <= 0:
            out.append(p)
        if (fp < 0 < fq) or (fq < 0 < fp):
            t = fp / (fp - fq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return out


def _area2(poly: list[Point]) -> Fraction:
    s = Fraction(0)
    for i in range(len(poly)):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % len(poly)]
        s += x1 * y2 - x2 * y1
    return abs(s)


def default_extent(k1: int, k2: int) -> int:
    return 2 * (k1 + k2) + 2


def region_polygons(k1: int, k2: int, extent: int | None = None) -> dict[str, list[Point]]:
    """Nonempty region polygons inside [0, extent]^2, keyed in label order."""
    ext = Fraction(extent or default_extent(k1, k2))
    box = [(Fraction(0), Fraction(0)), (ext, Fraction(0)), (ext, ext), (Fraction(0), ext)]
    out = {}
    for lab in LABELS:
        poly = box
        for u, v, h in _half_planes(k1, k2, lab):
            poly = _clip(poly, u, v, h)
            if not poly:
                break
        if len(poly) >= 3 and _area2(poly) > 0:
            out[lab] = poly
    return out


def _lattice(k1: int, k2: int, extent: int):
    for c2 in range(1, extent + 1):
        for c1 in range(1, extent + 1):
            if (c1 + c2 - k1 - k2) % 2 == 0:
                yield c1, c2, classify(Weights(k1, k2, c1, c2)).label


def render_ascii(k1: int, k2: int, extent: int | None = None) -> str:
    ext = extent or default_extent(k1, k2)
    grid = {(c1, c2): lab for c1, c2, lab in _lattice(k1, k2, ext)}
    width = len(str(ext))
    lines = []
    for c2 in range(ext, 0, -1):
        row = [ASCII_MARK[grid[(c1, c2)]] if (c1, c2) in grid else "." for c1 in range(1, ext + 1)]
        lines.append(f"{c2:>{width}} " + " ".join(row))
    lines.append(" " * (width + 1) + " ".join(str(c1 % 10) for c1 in range(1, ext + 1)))
    lines.append("key: A = a', B = b', D = d'; '.' marks the wrong parity; c1 runs left to right")
    return "\n".join(lines)


def _fmt(x: Fraction) -> str:
    return f"{float(x):.2f}"


def render_svg(k1: int, k2: int, extent: int | None = None, caption: list[str] | None = None) -> str:
    ext = extent or default_extent(k1, k2)
    scale, margin = 16, 40
    size = ext * scale + 2 * margin
    extra = 18 * len(caption or [])
    height = size + extra

    def xy(c1, c2):
        return margin + Fraction(c1) * scale, size - margin - Fraction(c2) * scale

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{height}" viewBox="0 0 {size} {height}">',
        f"<title>Regions in the (c1, c2) plane for (k1, k2) = ({k1}, {k2})</title>",
        f'<rect x="0" y="0" width="{size}" height="{height}" fill="white"/>',
    ]
    polys = region_polygons(k1, k2, ext)
    for lab, poly in polys.items():
        pts = " ".join(f"{_fmt(X)},{_fmt(Y)}" for X, Y in (xy(*pt) for pt in poly))
        parts.append(
            f'<polygon class="region" data-region="{escape(lab)}" points="{pts}" '
            f'fill="{COLOURS[lab]}" stroke="#444" stroke-width="0.8"/>'
        )
        cx = sum(pt[0] for pt in poly) / len(poly)
        cy = sum(pt[1] for pt in poly) / len(poly)
        X, Y = xy(cx, cy)
        parts.append(f'<text x="{_fmt(X)}" y="{_fmt(Y)}" font-size="14" text-anchor="middle">({escape(lab)})</text>')
    for c1, c2, lab in _lattice(k1, k2, ext):
        X, Y = xy(c1, c2)
        parts.append(f'<circle cx="{_fmt(X)}" cy="{_fmt(Y)}" r="1.6" fill="#222" data-region="{escape(lab)}"/>')
    x0, y0 = xy(0, 0)
    x1, _ = xy(ext, 0)
    _, y1 = xy(0, ext)
    parts.append(f'<line x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x1)}" y2="{_fmt(y0)}" stroke="black"/>')
    parts.append(f'<line x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x0)}" y2="{_fmt(y1)}" stroke="black"/>')
    parts.append(f'<text x="{_fmt(x1)}" y="{_fmt(y0 + 16)}" font-size="12" text-anchor="end">c1</text>')
    parts.append(f'<text x="{_fmt(x0 - 8)}" y="{_fmt(y1)}" font-size="12" text-anchor="end">c2</text>')
    for i, line in enumerate(caption or []):
        parts.append(f'<text x="{margin}" y="{size + 14 + 18 * i}" font-size="12">{escape(line)}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
