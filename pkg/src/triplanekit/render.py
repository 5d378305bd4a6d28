"""Plain-text and SVG pictures of tri-plane diagrams.

Three side-by-side plat panels share the boundary point numbering: boundary
at the top, braid in the middle, caps at the bottom.  In ascii each crossing
occupies three rows with the over-strand drawn through the center; colors
appear as digit labels on the boundary points and caps.  In SVG strands are
colored polylines (color 1 blue, 2 red, 3 green) and the under-strand is
broken at each crossing.
"""

from __future__ import annotations

from typing import Optional

from .coloring import cap_colors, propagate_braid
from .model import Coloring, Tangle
from .tpdio import TpdDocument

_SVG_COLORS = {1: "#1f77b4", 2: "#d62728", 3: "#2ca02c", None: "#555555"}
_GAP = "    "


def render(doc: TpdDocument, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return render_ascii(doc)
    if fmt == "svg":
        return render_svg(doc)
    raise ValueError(f"unknown render format {fmt!r}")


def _tangle_levels(t: Tangle, c: Optional[Coloring]) -> Optional[list[tuple[int, ...]]]:
    """Color vectors at every horizontal level, caps (level 0) to boundary,
    or None when the document is uncolored or the coloring does not extend."""
    if c is None:
        return None
    caps = cap_colors(t.braid, c.endpoint_colors)
    if caps is None:
        return None
    vec = []
    for col in caps:
        vec.extend((col, col))
    levels = [tuple(vec)]
    for e in t.braid.word:
        step = t.braid.__class__(t.braid.strands, (e,))
        vec = list(propagate_braid(step, tuple(vec)))
        levels.append(tuple(vec))
    return levels


def _place(row: list[str], col: int, text: str) -> None:
    for i, ch in enumerate(text):
        if 0 <= col + i < len(row):
            row[col + i] = ch


def _ascii_panel(t: Tangle, c: Optional[Coloring], caption: str, braid_rows: int) -> list[str]:
    n = 2 * t.bridges
    width = 4 * (n - 1) + 1
    x = lambda p: 4 * (p - 1)
    levels = _tangle_levels(t, c)

    def strand_row(exclude=()) -> list[str]:
        row = [" "] * width
        for p in range(1, n + 1):
            if p not in exclude:
                row[x(p)] = "|"
        return row

    rows = []
    head = [" "] * width
    _place(head, 0, caption)
    rows.append(head)
    numbers = [" "] * width
    for p in range(1, n + 1):
        _place(numbers, x(p), str(p))
    rows.append(numbers)
    if levels is not None:
        lab = [" "] * width
        for p in range(1, n + 1):
            _place(lab, x(p), str(levels[-1][p - 1]))
        rows.append(lab)
    rows.append(strand_row())
    for _ in range(braid_rows - 3 * len(t.braid.word)):
        rows.append(strand_row())
    for e in reversed(t.braid.word):
        p = abs(e)
        c1 = x(p)
        a, b, m = strand_row((p, p + 1)), strand_row((p, p + 1)), strand_row((p, p + 1))
        a[c1 + 1], a[c1 + 3] = "\\", "/"
        m[c1 + 2] = "\\" if e > 0 else "/"
        b[c1 + 1], b[c1 + 3] = "/", "\\"
        rows.extend([a, m, b])
    rows.append(strand_row())
    caps = [" "] * width
    for k in range(1, t.bridges + 1):
        c1 = x(2 * k - 1)
        _place(caps, c1, "\\___/")
    rows.append(caps)
    if levels is not None:
        lab = [" "] * width
        for k in range(1, t.bridges + 1):
            _place(lab, x(2 * k - 1) + 2, str(levels[0][2 * k - 2]))
        rows.append(lab)
    return ["".join(r).rstrip() for r in rows]


def render_ascii(doc: TpdDocument) -> str:
    braid_rows = 3 * max(len(doc.diagram.tangle(i).braid.word) for i in (1, 2, 3))
    panels = [
        _ascii_panel(doc.diagram.tangle(i), doc.coloring, f"tangle {i}", braid_rows)
        for i in (1, 2, 3)
    ]
    height = max(len(p) for p in panels)
    widths = [max((len(r) for r in p), default=0) for p in panels]
    lines = []
    for r in range(height):
        cells = []
        for p, w in zip(panels, widths):
            cell = p[r] if r < len(p) else ""
            cells.append(cell.ljust(w))
        lines.append(_GAP.join(cells).rstrip())
    return "".join(line + "\n" for line in lines)


def _svg_panel(
    t: Tangle, c: Optional[Coloring], offset_x: int, caption: str, total_levels: int
) -> tuple[list[str], int, int]:
    sx, sy, margin, cap_r = 24, 24, 20, 10
    n = 2 * t.bridges
    L = len(t.braid.word)
    x = lambda p: offset_x + margin + (p - 1) * sx
    # level v: 0 = caps at the bottom, total_levels = boundary at the top.
    y = lambda v: margin + 18 + (total_levels - v) * sy
    levels = _tangle_levels(t, c)

    def color(level: int, pos: int) -> str:
        if levels is None:
            return _SVG_COLORS[None]
        return _SVG_COLORS[levels[level][pos - 1]]

    parts = [
        f'<text x="{x(1)}" y="{margin}" font-size="12" fill="#000">{caption}</text>'
    ]
    for p in range(1, n + 1):
        parts.append(
            f'<text x="{x(p) - 3}" y="{y(total_levels) - 8}" font-size="10" fill="#000">{p}</text>'
        )
    for p in range(1, n + 1):
        if total_levels > L:
            parts.append(
                f'<line x1="{x(p)}" y1="{y(L)}" x2="{x(p)}" y2="{y(total_levels)}" '
                f'stroke="{color(L, p)}" stroke-width="2"/>'
            )
    for v, e in enumerate(t.braid.word):
        p = abs(e)
        y0, y1 = y(v), y(v + 1)
        ym = (y0 + y1) / 2
        xm = (x(p) + x(p + 1)) / 2
        for q in range(1, n + 1):
            if q in (p, p + 1):
                continue
            parts.append(
                f'<line x1="{x(q)}" y1="{y0}" x2="{x(q)}" y2="{y1}" '
                f'stroke="{color(v, q)}" stroke-width="2"/>'
            )
        # over-strand continuous, under-strand broken at the center
        left_c, right_c = color(v, p), color(v, p + 1)
        if e > 0:  # left strand passes over, travelling right
            parts.append(
                f'<line x1="{x(p + 1)}" y1="{y0}" x2="{xm + 4:.1f}" y2="{(y0 + ym) / 2 + 2:.1f}" '
                f'stroke="{right_c}" stroke-width="2"/>'
            )
            parts.append(
                f'<line x1="{xm - 4:.1f}" y1="{(ym + y1) / 2 - 2:.1f}" x2="{x(p)}" y2="{y1}" '
                f'stroke="{right_c}" stroke-width="2"/>'
            )
            parts.append(
                f'<line x1="{x(p)}" y1="{y0}" x2="{x(p + 1)}" y2="{y1}" '
                f'stroke="{left_c}" stroke-width="2"/>'
            )
        else:  # right strand passes over, travelling left
            parts.append(
                f'<line x1="{x(p)}" y1="{y0}" x2="{xm - 4:.1f}" y2="{(y0 + ym) / 2 + 2:.1f}" '
                f'stroke="{left_c}" stroke-width="2"/>'
            )
            parts.append(
                f'<line x1="{xm + 4:.1f}" y1="{(ym + y1) / 2 - 2:.1f}" x2="{x(p + 1)}" y2="{y1}" '
                f'stroke="{left_c}" stroke-width="2"/>'
            )
            parts.append(
                f'<line x1="{x(p + 1)}" y1="{y0}" x2="{x(p)}" y2="{y1}" '
                f'stroke="{right_c}" stroke-width="2"/>'
            )
    for k in range(1, t.bridges + 1):
        x1, x2 = x(2 * k - 1), x(2 * k)
        parts.append(
            f'<path d="M {x1} {y(0)} A {cap_r} {cap_r} 0 0 0 {x2} {y(0)}" '
            f'fill="none" stroke="{color(0, 2 * k - 1)}" stroke-width="2"/>'
        )
    width = 2 * margin + (n - 1) * sx
    height = y(0) + cap_r + margin
    return parts, width, height


def render_svg(doc: TpdDocument) -> str:
    parts = []
    offset = 0
    total_h = 0
    total_levels = max(len(doc.diagram.tangle(i).braid.word) for i in (1, 2, 3))
    for i in (1, 2, 3):
        panel, w, h = _svg_panel(
            doc.diagram.tangle(i), doc.coloring, offset, f"tangle {i}", total_levels
        )
        parts.extend(panel)
        offset += w + 16
        total_h = max(total_h, h)
    body = "\n".join(parts)
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{offset}" height="{total_h}" '
        f'viewBox="0 0 {offset} {total_h}">\n'
        f'<rect x="0" y="0" width="{offset}" height="{total_h}" fill="#ffffff"/>\n'
        f"{body}\n</svg>\n"
    )
