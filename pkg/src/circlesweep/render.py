"""SVG rendering: geometry with region shading, feature dots, both graphs."""
from __future__ import annotations

import numpy as np

from . import kernels, sweep
from .arrangement import Arrangement, boundary_features
from .geom import Axis
from .vdigraph import VDigraph

_GEOM_W = 460.0
_PANEL_W = 300.0
_H = 460.0
_PAD = 24.0


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def render_svg(arr: Arrangement) -> str:
    gx = sweep.build_graph(arr, Axis.X)
    gy = sweep.build_graph(arr, Axis.Y)

    xmin = min(c.cx - c.r for c in arr.circles)
    xmax = max(c.cx + c.r for c in arr.circles)
    ymin = min(c.cy - c.r for c in arr.circles)
    ymax = max(c.cy + c.r for c in arr.circles)
    span = max(xmax - xmin, ymax - ymin)
    scale = (_GEOM_W - 2 * _PAD) / span
    ox, oy = xmin, ymax  # svg y grows downward

    def sx(x: float) -> float:
        return _PAD + (x - ox) * scale

    def sy(y: float) -> float:
        return _PAD + (oy - y) * scale

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_GEOM_W + _PANEL_W:.0f}" height="{_H:.0f}" '
        f'viewBox="0 0 {_GEOM_W + _PANEL_W:.0f} {_H:.0f}">',
        f'<rect width="{_GEOM_W + _PANEL_W:.0f}" height="{_H:.0f}" fill="white"/>',
    ]

    # region shading: thin vertical strips of sign-cell intervals
    cols = 220
    ts = np.linspace(xmin + 1e-6 * span, xmax - 1e-6 * span, cols)
    cx, cy, r, sign = kernels.pack_circles(arr.circles)
    counts, bounds, _, _ = kernels.fiber_intervals(ts, cx, cy, r, sign, arr.eps)
    w = (xmax - xmin) / cols * scale + 0.6
    for i, t in enumerate(ts):
        for k in range(int(counts[i])):
            lo, hi = bounds[i, k, 0], bounds[i, k, 1]
            parts.append(
                f'<rect x="{sx(t) - w / 2:.2f}" y="{sy(hi):.2f}" width="{w:.2f}" '
                f'height="{max((hi - lo) * scale, 0.5):.2f}" fill="#cfe8ff"/>'
            )

    for c in arr.circles:
        parts.append(
            f'<circle cx="{sx(c.cx):.2f}" cy="{sy(c.cy):.2f}" r="{c.r * scale:.2f}" '
            f'fill="none" stroke="#333" stroke-width="1.2"/>'
        )
    for feature, on_region in boundary_features(arr, Axis.X):
        p = feature.point
        is_pole = hasattr(feature, "owner")
        color = "#d62728" if is_pole else "#2ca02c"
        fill = color if on_region else "none"
        parts.append(
            f'<circle cx="{sx(p.x):.2f}" cy="{sy(p.y):.2f}" r="3" fill="{fill}" '
            f'stroke="{color}" stroke-width="1"/>'
        )
    sxp, syp = sx(arr.seed.x), sy(arr.seed.y)
    parts.append(f'<path d="M{sxp - 4:.1f} {syp:.1f}h8M{sxp:.1f} {syp - 4:.1f}v8" stroke="#000" stroke-width="1"/>')

    parts.append(_graph_panel(gx, "axis x", _GEOM_W, _PAD))
    parts.append(_graph_panel(gy, "axis y", _GEOM_W, _H / 2 + _PAD / 2))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _graph_panel(g: VDigraph, title: str, x0: float, y0: float) -> str:
    h = _H / 2 - _PAD
    w = _PANEL_W - _PAD
    values = [v.value for v in g.vertices]
    vmin, vmax = min(values), max(values)
    span = max(vmax - vmin, 1e-9)

    def px(val: float) -> float:
        return x0 + 10 + (val - vmin) / span * (w - 40)

    # lane per edge so parallel edges are visible
    lanes: dict[int, int] = {}
    used: list[tuple[float, float, int]] = []
    for i, e in enumerate(g.edges):
        a = g.value(e.src)
        b = g.value(e.dst)
        lane = 0
        while any(not (b <= ua or a >= ub) and lane == ul for ua, ub, ul in used):
            lane += 1
        lanes[i] = lane
        used.append((a, b, lane))
    ymid = y0 + h / 2
    lane_h = 26.0
    vy: dict[str, float] = {}
    for v in g.vertices:
        touching = [lanes[i] for i, e in enumerate(g.edges) if v.id in (e.src, e.dst)]
        vy[v.id] = ymid + (sum(touching) / len(touching)) * 0 if touching else ymid

    parts = [
        f'<text x="{x0 + 10:.1f}" y="{y0 + 4:.1f}" font-size="11" fill="#555">{_esc(title)}</text>'
    ]
    for i, e in enumerate(g.edges):
        xa, xb = px(g.value(e.src)), px(g.value(e.dst))
        bend = (lanes[i] - 0.5) * lane_h
        parts.append(
            f'<path d="M{xa:.1f} {ymid:.1f} Q {(xa + xb) / 2:.1f} {ymid + bend:.1f} {xb:.1f} {ymid:.1f}" '
            f'fill="none" stroke="#1f77b4" stroke-width="1.4"/>'
        )
    for v in g.vertices:
        parts.append(
            f'<circle cx="{px(v.value):.1f}" cy="{ymid:.1f}" r="3.4" fill="#1f77b4"/>'
            f'<text x="{px(v.value):.1f}" y="{ymid - 8:.1f}" font-size="9" text-anchor="middle" '
            f'fill="#333">{_esc(v.id)}:{v.value:.4g}</text>'
        )
    return "\n".join(parts)
