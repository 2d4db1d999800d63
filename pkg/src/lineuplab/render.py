"""Deterministic SVG rendering of lineup panels.

All coordinates are formatted to exactly two decimals so identical
bundles render to identical bytes on any platform. Marks are monochrome
with a single accent color for boxplot mean dots; nothing in the output
distinguishes the data panel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .diagnostics import (
    BinnedResidualPoints,
    BoxplotStats,
    EmpiricalLogitPoints,
    QQPoints,
    ScatterPoints,
)
from .errors import KindMismatch
from .lineup import LineupBundle, PanelData

PANEL_W = 150.0
PANEL_H = 150.0
TITLE_H = 16.0
MARGIN = 8.0
GAP = 6.0

INK = "#333333"
FAINT = "#999999"
FRAME = "#bbbbbb"
ACCENT = "#d95f02"

BOX_HALF_WIDTH = 0.3  # in band units; whisker caps use half of this


@dataclass(frozen=True)
class Scales:
    x: tuple[float, float]
    y: tuple[float, float]
    padding: float = 0.05


@dataclass(frozen=True)
class PanelGeom:
    width: float
    height: float


def _fmt(v: float) -> str:
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


def _extents(payload) -> tuple[float, float, float, float]:
    if isinstance(payload, BoxplotStats):
        n = len(payload.groups)
        ys = []
        for g in payload.groups:
            ys.extend((g.whisker_lo, g.whisker_hi))
            ys.extend(g.outliers)
        return 0.5, n + 0.5, min(ys), max(ys)
    if isinstance(payload, ScatterPoints):
        return float(payload.x.min()), float(payload.x.max()), float(payload.y.min()), float(payload.y.max())
    if isinstance(payload, BinnedResidualPoints):
        xs = [p.bin_center for p in payload.points]
        ys = [p.mean_residual for p in payload.points]
        return min(xs), max(xs), min(ys), max(ys)
    if isinstance(payload, EmpiricalLogitPoints):
        xs = [p.mean_x for p in payload.points]
        ys = [p.adj_logit for p in payload.points]
        return min(xs), max(xs), min(ys), max(ys)
    if isinstance(payload, QQPoints):
        return (
            float(payload.theoretical.min()),
            float(payload.theoretical.max()),
            float(payload.sample.min()),
            float(payload.sample.max()),
        )
    raise KindMismatch(f"cannot compute extents for {type(payload).__name__}")


def _pad_axis(lo: float, hi: float, padding: float) -> tuple[float, float]:
    span = hi - lo
    if span == 0.0:
        return lo - 1.0, hi + 1.0
    return lo - padding * span, hi + padding * span


def common_scales(panels: list[PanelData], padding: float = 0.05) -> Scales:
    """Union of all panels' data extents, expanded by the padding fraction
    on each side; a zero-extent axis becomes (v - 1, v + 1)."""
    if not panels:
        raise ValueError("no panels")
    kinds = {p.kind for p in panels}
    if len(kinds) != 1:
        raise KindMismatch(f"mixed panel kinds: {sorted(kinds)}")
    xlo = ylo = math.inf
    xhi = yhi = -math.inf
    for p in panels:
        a, b, c, d = _extents(p.payload)
        xlo, xhi = min(xlo, a), max(xhi, b)
        ylo, yhi = min(ylo, c), max(yhi, d)
    return Scales(_pad_axis(xlo, xhi, padding), _pad_axis(ylo, yhi, padding), padding)


class _Map:
    """Affine data-to-pixel map; y is flipped so larger values sit higher."""

    def __init__(self, scales: Scales, geom: PanelGeom):
        self.scales = scales
        self.geom = geom

    def x(self, v: float) -> float:
        lo, hi = self.scales.x
        return (v - lo) / (hi - lo) * self.geom.width

    def y(self, v: float) -> float:
        lo, hi = self.scales.y
        return self.geom.height - (v - lo) / (hi - lo) * self.geom.height


def _circle(cx: float, cy: float, r: float, fill: str) -> str:
    return f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}" fill="{fill}"/>'


def _line(x1: float, y1: float, x2: float, y2: float, stroke: str, width: float = 1.0) -> str:
    return (
        f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
        f'stroke="{stroke}" stroke-width="{_fmt(width)}"/>'
    )


def _zero_line(m: _Map, out: list[str]) -> None:
    lo, hi = m.scales.y
    if lo < 0.0 < hi:
        out.append(_line(0.0, m.y(0.0), m.geom.width, m.y(0.0), FAINT))


def _boxplot_marks(stats: BoxplotStats, m: _Map, out: list[str]) -> None:
    half = BOX_HALF_WIDTH
    for i, g in enumerate(stats.groups, start=1):
        left, right = m.x(i - half), m.x(i + half)
        cleft, cright = m.x(i - half / 2), m.x(i + half / 2)
        out.append(
            f'<rect x="{_fmt(left)}" y="{_fmt(m.y(g.q3))}" '
            f'width="{_fmt(right - left)}" height="{_fmt(m.y(g.q1) - m.y(g.q3))}" '
            f'fill="none" stroke="{INK}" stroke-width="1.00"/>'
        )
        out.append(_line(left, m.y(g.median), right, m.y(g.median), INK, 1.5))
        out.append(_line(m.x(i), m.y(g.q3), m.x(i), m.y(g.whisker_hi), INK))
        out.append(_line(m.x(i), m.y(g.q1), m.x(i), m.y(g.whisker_lo), INK))
        out.append(_line(cleft, m.y(g.whisker_hi), cright, m.y(g.whisker_hi), INK))
        out.append(_line(cleft, m.y(g.whisker_lo), cright, m.y(g.whisker_lo), INK))
        for v in g.outliers:
            out.append(_circle(m.x(i), m.y(v), 2.0, INK))
        out.append(_circle(m.x(i), m.y(g.mean), 2.5, ACCENT))


def render_panel(p: PanelData, s: Scales, geom: PanelGeom) -> str:
    """Kind-specific marks for one panel, as a <g> fragment in panel-local
    pixel coordinates."""
    m = _Map(s, geom)
    out: list[str] = []
    payload = p.payload
    if isinstance(payload, BoxplotStats):
        _boxplot_marks(payload, m, out)
    elif isinstance(payload, ScatterPoints):
        _zero_line(m, out)
        for xv, yv in zip(payload.x.tolist(), payload.y.tolist()):
            out.append(_circle(m.x(xv), m.y(yv), 2.0, INK))
    elif isinstance(payload, BinnedResidualPoints):
        _zero_line(m, out)
        for pt in payload.points:
            out.append(_circle(m.x(pt.bin_center), m.y(pt.mean_residual), 2.5, INK))
    elif isinstance(payload, EmpiricalLogitPoints):
        coords = " ".join(
            f"{_fmt(m.x(pt.mean_x))},{_fmt(m.y(pt.adj_logit))}" for pt in payload.points
        )
        out.append(f'<polyline points="{coords}" fill="none" stroke="{INK}" stroke-width="1.00"/>')
        for pt in payload.points:
            out.append(_circle(m.x(pt.mean_x), m.y(pt.adj_logit), 2.5, INK))
    elif isinstance(payload, QQPoints):
        t0 = max(s.x[0], s.y[0])
        t1 = min(s.x[1], s.y[1])
        if t0 < t1:
            out.append(_line(m.x(t0), m.y(t0), m.x(t1), m.y(t1), FAINT))
        for xv, yv in zip(payload.theoretical.tolist(), payload.sample.tolist()):
            out.append(_circle(m.x(xv), m.y(yv), 2.0, INK))
    else:
        raise KindMismatch(f"cannot render payload of type {type(payload).__name__}")
    return '<g class="marks">' + "".join(out) + "</g>"


def render_lineup(bundle: LineupBundle, cols: int = 5) -> str:
    """Standalone SVG document: m panels in row-major order under shared
    scales, each titled with its panel number only."""
    if cols < 1:
        raise ValueError("cols must be at least 1")
    panels = list(bundle.panels)
    scales = common_scales(panels)
    geom = PanelGeom(PANEL_W, PANEL_H - TITLE_H)
    m = len(panels)
    rows = (m + cols - 1) // cols
    width = 2 * MARGIN + cols * PANEL_W + (cols - 1) * GAP
    height = 2 * MARGIN + rows * PANEL_H + (rows - 1) * GAP

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}" '
        f'font-family="sans-serif" font-size="10">\n'
        f'<rect x="0.00" y="0.00" width="{_fmt(width)}" height="{_fmt(height)}" fill="#ffffff"/>\n'
    ]
    for p in panels:
        r, c = divmod(p.panel_number - 1, cols)
        px = MARGIN + c * (PANEL_W + GAP)
        py = MARGIN + r * (PANEL_H + GAP)
        parts.append(
            f'<g class="panel" id="panel-{p.panel_number}" '
            f'transform="translate({_fmt(px)}, {_fmt(py)})">\n'
            f'<rect x="0.00" y="0.00" width="{_fmt(PANEL_W)}" height="{_fmt(PANEL_H)}" '
            f'fill="none" stroke="{FRAME}" stroke-width="1.00"/>\n'
            f'<text x="4.00" y="12.00" fill="{INK}">{p.panel_number}</text>\n'
            f'<g transform="translate(0.00, {_fmt(TITLE_H)})">'
        )
        parts.append(render_panel(p, scales, geom))
        parts.append("</g>\n</g>\n")
    parts.append("</svg>\n")
    return "".join(parts)
