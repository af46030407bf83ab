"""Deterministic ASCII and SVG renderings of foldings and trajectory diagrams.

SVG output uses lattice units in the viewBox with the origin at the
bottom-left, so the same input always produces the same bytes.
"""

from __future__ import annotations

from fractions import Fraction

from .trajectory import Folding, TrajectoryDiagram

PX = 40  # pixels per lattice unit for the width/height attributes
MARGIN = Fraction(1)


def render_folding_ascii(f: Folding) -> str:
    """One column per unit step; rows are heights k (top) down to 0."""
    rows = [[" "] * f.n for _ in range(f.k + 1)]
    for x in range(f.n):
        a, b = f.heights[x], f.heights[x + 1]
        if b > a:
            rows[a][x] = "/"
        elif b < a:
            rows[b][x] = "\\"
        else:
            rows[a][x] = "_"
    lines = ["".join(r).rstrip() for r in reversed(rows)]
    while lines and not lines[0]:
        lines.pop(0)
    return "\n".join(lines) + "\n"


def render_trajectory_ascii(d: TrajectoryDiagram) -> str:
    """One character cell per half unit.

    o lattice points on the path, / and \\ diagonal moves, = and # rests
    along horizontal and vertical sides, * and x integral and
    half-integral crossings.
    """
    w, h = 2 * d.l + 1, 2 * d.k + 1
    grid = [[" "] * w for _ in range(h)]
    for cy in range(h):
        for cx in (0, w - 1):
            grid[cy][cx] = "|"
    for cx in range(w):
        for cy in (0, h - 1):
            grid[cy][cx] = "-"
    for cx in (0, w - 1):
        for cy in (0, h - 1):
            grid[cy][cx] = "+"
    for (x0, y0), (x1, y1) in d.segments:
        mx, my = x0 + x1, y0 + y1
        if x0 != x1 and y0 != y1:
            grid[my][mx] = "/" if (x1 - x0) * (y1 - y0) > 0 else "\\"
        elif y0 == y1 and x0 != x1:
            grid[my][mx] = "="
        elif x0 == x1 and y0 != y1:
            grid[my][mx] = "#"
    for x, y in d.points:
        grid[2 * y][2 * x] = "o"
    for c in d.crossings:
        grid[c.point2[1]][c.point2[0]] = "*" if c.integral else "x"
    return "\n".join("".join(r).rstrip() for r in reversed(grid)) + "\n"


def _num(v) -> str:
    v = Fraction(v)
    if v.denominator == 1:
        return str(v.numerator)
    return f"{float(v):.3f}".rstrip("0").rstrip(".")


def _svg_open(width, height) -> list[str]:
    vb = [-MARGIN, -MARGIN, width + 2 * MARGIN, height + 2 * MARGIN]
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_num(vb[2] * PX)}" height="{_num(vb[3] * PX)}" '
        f'viewBox="{" ".join(_num(v) for v in vb)}">',
        '<rect x="{0}" y="{1}" width="{2}" height="{3}" fill="white"/>'.format(*(_num(v) for v in vb)),
    ]


def render_folding_svg(f: Folding) -> str:
    k = f.k

    def pt(x, hgt):
        return f"{_num(x)},{_num(k - hgt)}"

    out = _svg_open(f.n, k)
    out.append(
        f'<g stroke="#bbbbbb" stroke-width="0.02">'
        + "".join(
            f'<line x1="0" y1="{_num(k - j)}" x2="{f.n}" y2="{_num(k - j)}"/>' for j in range(k + 1)
        )
        + "</g>"
    )
    path = " ".join(pt(x, hgt) for x, hgt in enumerate(f.heights))
    out.append(f'<polyline points="{path}" fill="none" stroke="black" stroke-width="0.06"/>')
    for x in range(f.n):
        if f.heights[x] == f.heights[x + 1]:
            y = _num(k - f.heights[x])
            out.append(
                f'<line class="rest" x1="{x}" y1="{y}" x2="{x + 1}" y2="{y}" stroke="#c0392b" stroke-width="0.1"/>'
            )
    for x, hgt in enumerate(f.heights):
        out.append(f'<circle cx="{x}" cy="{_num(k - hgt)}" r="0.08" fill="black"/>')
        out.append(
            f'<text x="{x}" y="{_num(Fraction(k - hgt) - Fraction(1, 5))}" font-size="0.3" '
            f'text-anchor="middle" font-family="monospace">{x}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_trajectory_svg(d: TrajectoryDiagram) -> str:
    k, l = d.k, d.l

    def yy(v):
        return _num(Fraction(k) - Fraction(v))

    out = _svg_open(l, k)
    out.append(f'<rect x="0" y="0" width="{l}" height="{k}" fill="none" stroke="black" stroke-width="0.04"/>')
    path = " ".join(f"{x},{yy(y)}" for x, y in d.points)
    out.append(f'<polyline points="{path}" fill="none" stroke="#1f4e99" stroke-width="0.05"/>')
    for b in d.bounces:
        if b.is_rest:
            cx, cy = Fraction(b.point2[0], 2), Fraction(b.point2[1], 2)
            out.append(
                f'<rect class="rest" x="{_num(cx - Fraction(1, 10))}" y="{yy(cy + Fraction(1, 10))}" '
                f'width="0.2" height="0.2" fill="#c0392b"/>'
            )
    for c in d.crossings:
        cx, cy = c.point
        fill = "black" if c.integral else "white"
        out.append(
            f'<circle class="crossing" cx="{_num(cx)}" cy="{yy(cy)}" r="0.12" fill="{fill}" '
            'stroke="black" stroke-width="0.03"/>'
        )
    labels: dict = {}
    for x, p in enumerate(d.points):
        labels.setdefault(p, []).append(str(x))
    for (x, y), names in sorted(labels.items()):
        dy = Fraction(-1, 5) if y < k else Fraction(2, 5)
        out.append(
            f'<text x="{_num(x)}" y="{_num(Fraction(k - y) + dy)}" font-size="0.25" '
            f'text-anchor="middle" font-family="monospace">{",".join(names)}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
