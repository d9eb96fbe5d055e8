"""Standalone SVG rendering of simplex classifications and best-rule maps.

Weight triples are projected barycentrically onto a triangle with player 1
at the top vertex, player 2 bottom left, player 3 bottom right.  Each grid
point owns one third of every incident subdivision cell (the upward and
downward triangles of the lattice), so the point's polygon is the hexagonal
patch around it, clipped at the boundary.  No external assets are used.
"""

import math
from pathlib import Path

from .core import BORDA
from .simplex import BestRuleMap, Comparison, PairwiseClassification

CLASS_COLORS = {
    Comparison.A_GREATER: "#1a9641",
    Comparison.EQUAL: "#f5d327",
    Comparison.B_GREATER: "#d7191c",
}

SET_PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
)

_V1 = (0.5, math.sqrt(3.0) / 2.0)
_V2 = (0.0, 0.0)
_V3 = (1.0, 0.0)


def _project(point, resolution, scale, margin):
    t1, t2, t3 = (w / resolution for w in point)
    x = t1 * _V1[0] + t2 * _V2[0] + t3 * _V3[0]
    y = t1 * _V1[1] + t2 * _V2[1] + t3 * _V3[1]
    return (margin + x * scale, margin + (_V1[1] - y) * scale)


def _cells(resolution):
    """Corner triples of every upward and downward subdivision cell."""
    d = resolution
    for i in range(d):
        for j in range(d - i):
            k = d - 1 - i - j
            yield ((i + 1, j, k), (i, j + 1, k), (i, j, k + 1))
    for i in range(d - 1):
        for j in range(d - 1 - i):
            k = d - 2 - i - j
            yield ((i, j + 1, k + 1), (i + 1, j, k + 1), (i + 1, j + 1, k))


def _corner_quads(corners, resolution, scale, margin):
    """Split a cell at its centroid; each corner keeps its third as a quad."""
    pts = [_project(c, resolution, scale, margin) for c in corners]
    cx = sum(p[0] for p in pts) / 3.0
    cy = sum(p[1] for p in pts) / 3.0
    mids = []
    for a in range(3):
        b = (a + 1) % 3
        mids.append(((pts[a][0] + pts[b][0]) / 2.0, (pts[a][1] + pts[b][1]) / 2.0))
    for a in range(3):
        prev = (a + 2) % 3
        yield corners[a], (pts[a], mids[a], (cx, cy), mids[prev])


def _poly(points, fill, opacity):
    coords = " ".join(f"{x:.2f},{y:.2f}" for x, y in points)
    if opacity >= 0.999:
        return f'<polygon points="{coords}" fill="{fill}"/>'
    return f'<polygon points="{coords}" fill="{fill}" fill-opacity="{opacity:.3f}"/>'


def _svg_document(body, width, height):
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
            f'height="{height}" viewBox="0 0 {width} {height}">')
    return "\n".join([head, *body, "</svg>"]) + "\n"


def _frame(scale, margin, title):
    tri = [_project(p, 1, scale, margin) for p in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    coords = " ".join(f"{x:.2f},{y:.2f}" for x, y in tri)
    out = [f'<polygon points="{coords}" fill="none" stroke="#333" stroke-width="1"/>']
    labels = (("1", tri[0][0], tri[0][1] - 8, "middle"),
              ("2", tri[1][0] - 8, tri[1][1] + 14, "end"),
              ("3", tri[2][0] + 8, tri[2][1] + 14, "start"))
    for text, x, y, anchor in labels:
        out.append(f'<text x="{x:.2f}" y="{y:.2f}" text-anchor="{anchor}" '
                   f'font-family="sans-serif" font-size="14">{text}</text>')
    out.append(f'<text x="{margin:.2f}" y="18" font-family="sans-serif" '
               f'font-size="14">{title}</text>')
    return out


def _legend(entries, x, y):
    out = []
    for i, (color, text) in enumerate(entries):
        yy = y + i * 18
        out.append(f'<rect x="{x:.2f}" y="{yy:.2f}" width="12" height="12" '
                   f'fill="{color}"/>')
        out.append(f'<text x="{x + 18:.2f}" y="{yy + 10:.2f}" '
                   f'font-family="sans-serif" font-size="12">{text}</text>')
    return out


def render_ternary(data, path, *, size: int = 720, palette=None) -> Path:
    """Write a classification or best-rule map as a standalone SVG file.

    For classifications `palette` maps Comparison values to colors; for
    best-rule maps it is a color sequence assigned to the distinct rule
    sets in canonical order.
    """
    if isinstance(data, PairwiseClassification):
        return _render_classification(data, path, size, palette or CLASS_COLORS)
    if isinstance(data, BestRuleMap):
        return _render_best_map(data, path, size, palette or SET_PALETTE)
    raise TypeError(f"cannot render {type(data).__name__}")


def _render_classification(cls: PairwiseClassification, path, size, palette) -> Path:
    margin = 32.0
    scale = size - 2 * margin
    by_point = {p: i for i, p in enumerate(cls.points)}
    # Darker tones mark larger influence gaps in comparisons involving Borda.
    shade = BORDA in (cls.rule_a, cls.rule_b)
    max_diff = max((abs(d) for d in cls.diffs), default=0)
    body = []
    for corners in _cells(cls.resolution):
        for corner, quad in _corner_quads(corners, cls.resolution, scale, margin):
            idx = by_point[corner]
            klass = cls.classes[idx]
            opacity = 1.0
            if shade and klass is not Comparison.EQUAL and max_diff > 0:
                opacity = 0.2 + 0.8 * float(abs(cls.diffs[idx]) / max_diff)
            body.append(_poly(quad, palette[klass], opacity))
    title = (f"influence of player {cls.player + 1}: "
             f"{cls.rule_a} vs {cls.rule_b} (D={cls.resolution})")
    body.extend(_frame(scale, margin, title))
    legend_y = margin + scale * _V1[1] + 24
    body.extend(_legend([
        (palette[Comparison.A_GREATER], f"{cls.rule_a} greater"),
        (palette[Comparison.EQUAL], "equal"),
        (palette[Comparison.B_GREATER], f"{cls.rule_b} greater"),
    ], margin, legend_y))
    height = legend_y + 3 * 18 + 8
    out = Path(path)
    out.write_text(_svg_document(body, size, int(height)), encoding="utf-8")
    return out


def _render_best_map(bm: BestRuleMap, path, size, palette) -> Path:
    margin = 32.0
    scale = size - 2 * margin
    by_point = {p: i for i, p in enumerate(bm.points)}
    sets = bm.distinct_sets()
    colors = {s: palette[i % len(palette)] for i, s in enumerate(sets)}
    body = []
    for corners in _cells(bm.resolution):
        for corner, quad in _corner_quads(corners, bm.resolution, scale, margin):
            body.append(_poly(quad, colors[bm.best[by_point[corner]]], 1.0))
    title = f"rules maximizing influence of player {bm.player + 1} (D={bm.resolution})"
    body.extend(_frame(scale, margin, title))
    legend_y = margin + scale * _V1[1] + 24
    body.extend(_legend([(colors[s], " + ".join(s)) for s in sets],
                        margin, legend_y))
    height = legend_y + len(sets) * 18 + 8
    out = Path(path)
    out.write_text(_svg_document(body, size, int(height)), encoding="utf-8")
    return out
