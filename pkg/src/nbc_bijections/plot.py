"""SVG drawing of a planar arrangement with one label per region."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Mapping
from xml.sax.saxutils import escape

from .arrangement.core import Arrangement, fmt_hset
from .arrangement.linalg import solve_affine
from .arrangement.phi import phi_forward
from .arrangement.regions import RegionCell, enumerate_regions

Point = tuple[Fraction, Fraction]

WIDTH = 480
PAD = 24


def _bounding_box(arr: Arrangement) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    pts: list[Point] = [(Fraction(0), Fraction(0))]
    for h in arr.hyperplanes:
        # point of the line nearest the origin, so every line crosses the box
        a, b = h.normal
        t = h.offset / (a * a + b * b)
        pts.append((a * t, b * t))
    for i, j in combinations(arr.indices, 2):
        p = solve_affine(arr.equations((i, j)), 2)
        if p is not None and arr.normal_rank((i, j)) == 2:
            pts.append(p)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    span = max(max(xs) - min(xs), max(ys) - min(ys), Fraction(1))
    margin = span / 3
    return min(xs) - margin, min(ys) - margin, max(xs) + margin, max(ys) + margin


def _clip(poly: list[Point], a: tuple[Fraction, Fraction], b: Fraction, side: int) -> list[Point]:
    """Keep the part of convex ``poly`` with ``side * (a·p - b) >= 0``."""
    def f(p):
        return side * (a[0] * p[0] + a[1] * p[1] - b)

    out: list[Point] = []
    for k, p in enumerate(poly):
        q = poly[(k + 1) % len(poly)]
        fp, fq = f(p), f(q)
        if fp >= 0:
            out.append(p)
        if (fp > 0 > fq) or (fp < 0 < fq):
            t = fp / (fp - fq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return out


def _segment(a, b, box) -> tuple[Point, Point] | None:
    x0, y0, x1, y1 = box
    square = [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]
    pts = []
    for k in range(4):
        p, q = square[k], square[(k + 1) % 4]
        fp = a[0] * p[0] + a[1] * p[1] - b
        fq = a[0] * q[0] + a[1] * q[1] - b
        if fp == 0:
            pts.append(p)
        elif (fp > 0 > fq) or (fp < 0 < fq):
            t = fp / (fp - fq)
            pts.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    pts = sorted(set(pts))
    if len(pts) < 2:
        return None
    return pts[0], pts[-1]


def label_point(arr: Arrangement, region: RegionCell, box) -> Point:
    """Vertex centroid of ``region`` clipped to ``box``."""
    x0, y0, x1, y1 = box
    poly: list[Point] = [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]
    for h, s in zip(arr.hyperplanes, region.signs):
        poly = _clip(poly, h.normal, h.offset, s)
        if not poly:
            break
    if len(poly) < 3:
        raise ValueError(f"region {region} does not meet the drawing box")
    n = len(poly)
    return sum((p[0] for p in poly), Fraction(0)) / n, sum((p[1] for p in poly), Fraction(0)) / n


def plot_svg(arr: Arrangement, labels: Mapping[RegionCell, frozenset[int]] | None = None) -> str:
    if arr.dim != 2:
        raise ValueError(f"can only draw arrangements in the plane, got dimension {arr.dim}")
    if labels is None:
        labels = {r: phi_forward(arr, r) for r in enumerate_regions(arr)}
    box = _bounding_box(arr)
    x0, y0, x1, y1 = box
    scale = Fraction(WIDTH - 2 * PAD) / max(x1 - x0, y1 - y0)
    height = int((y1 - y0) * scale) + 2 * PAD

    def sx(x):
        return f"{float(PAD + (x - x0) * scale):.2f}"

    def sy(y):
        return f"{float(PAD + (y1 - y) * scale):.2f}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{height}" '
        f'viewBox="0 0 {WIDTH} {height}">',
        f'<rect x="{PAD}" y="{PAD}" width="{float((x1 - x0) * scale):.2f}" '
        f'height="{float((y1 - y0) * scale):.2f}" fill="white" stroke="#999" stroke-width="0.5"/>',
    ]
    for i, h in zip(arr.indices, arr.hyperplanes):
        seg = _segment(h.normal, h.offset, box)
        if seg is None:
            continue
        (px, py), (qx, qy) = seg
        out.append(
            f'<line class="hyperplane" id="H{i}" x1="{sx(px)}" y1="{sy(py)}" x2="{sx(qx)}" y2="{sy(qy)}" '
            'stroke="black" stroke-width="1.5"/>'
        )
        out.append(
            f'<text class="name" x="{sx(qx)}" y="{sy(qy)}" font-size="11" fill="#555">H{i}</text>'
        )
    for region in sorted(labels, key=RegionCell.sort_key):
        lx, ly = label_point(arr, region, box)
        text = fmt_hset(labels[region])
        text = "∅" if text == "∅" else "{" + text + "}"
        out.append(
            f'<text class="label" x="{sx(lx)}" y="{sy(ly)}" font-size="12" text-anchor="middle">'
            f"{escape(text)}</text>"
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
