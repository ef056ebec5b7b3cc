"""Standalone SVG figures: profile curves with tangency markers and A(V) charts.

Output is plain XML with no external references.  Coordinates are written
with a fixed number of decimals so repeated runs give identical bytes.
"""
from __future__ import annotations

import math
from xml.sax.saxutils import escape

WIDTH, HEIGHT = 800, 600
MARGIN = 60
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
           "#e377c2", "#17becf", "#7f7f7f", "#bcbd22")


def _f(v):
    return f"{v:.3f}"


class _Scale:
    """Linear map from a data box onto the plotting area, y pointing up."""

    def __init__(self, xs, ys, equal=False):
        x0, x1 = min(xs), max(xs)
        y0, y1 = min(ys), max(ys)
        if x1 - x0 < 1e-12:
            x0, x1 = x0 - 0.5, x1 + 0.5
        if y1 - y0 < 1e-12:
            y0, y1 = y0 - 0.5, y1 + 0.5
        pad_x, pad_y = 0.05 * (x1 - x0), 0.05 * (y1 - y0)
        self.x0, self.x1, self.y0, self.y1 = x0 - pad_x, x1 + pad_x, y0 - pad_y, y1 + pad_y
        self.kx = (WIDTH - 2 * MARGIN) / (self.x1 - self.x0)
        self.ky = (HEIGHT - 2 * MARGIN) / (self.y1 - self.y0)
        if equal:
            self.kx = self.ky = min(self.kx, self.ky)

    def __call__(self, x, y):
        return MARGIN + (x - self.x0) * self.kx, HEIGHT - MARGIN - (y - self.y0) * self.ky


def _header(title):
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" '
        f'width="{WIDTH}" height="{HEIGHT}">',
        f"<title>{escape(title)}</title>",
        f'<rect class="background" x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]


def _polyline(points, cls, color, width=1.5, dash=None):
    pts = " ".join(f"{_f(x)},{_f(y)}" for x, y in points)
    extra = f' stroke-dasharray="{dash}"' if dash else ""
    return (f'<polyline class="{cls}" points="{pts}" fill="none" stroke="{color}" '
            f'stroke-width="{width}"{extra}/>')


def _frame(sc, xlabel, ylabel):
    out = [f'<rect class="frame" x="{MARGIN}" y="{MARGIN}" width="{WIDTH - 2 * MARGIN}" '
           f'height="{HEIGHT - 2 * MARGIN}" fill="none" stroke="#888" stroke-width="0.5"/>']
    for i in range(5):
        xv = sc.x0 + (sc.x1 - sc.x0) * i / 4
        yv = sc.y0 + (sc.y1 - sc.y0) * i / 4
        px, _ = sc(xv, sc.y0)
        _, py = sc(sc.x0, yv)
        out.append(f'<text class="tick" x="{_f(px)}" y="{HEIGHT - MARGIN + 16}" font-size="11" '
                   f'text-anchor="middle">{xv:.3g}</text>')
        out.append(f'<text class="tick" x="{MARGIN - 6}" y="{_f(py + 4)}" font-size="11" '
                   f'text-anchor="end">{yv:.3g}</text>')
    out.append(f'<text class="label" x="{WIDTH / 2}" y="{HEIGHT - 15}" font-size="13" '
               f'text-anchor="middle">{escape(xlabel)}</text>')
    out.append(f'<text class="label" x="15" y="{HEIGHT / 2}" font-size="13" '
               f'transform="rotate(-90 15 {HEIGHT / 2})" text-anchor="middle">{escape(ylabel)}</text>')
    return out


def profile_svg(samples, tangencies, title: str = "profile curve") -> str:
    """Profile curve in the (x, z) model plane with its mirror image.

    ``samples`` are ProfileSample values, ``tangencies`` TangencyPoint values
    expressed in the same normalisation.  Each tangency gets a horizontal line
    (the horosphere it meets) and a marker with an arrow along dz/ds.
    """
    if not samples:
        raise ValueError("nothing to plot")
    xs = [p.x for p in samples] + [-p.x for p in samples] + [0.0]
    zs = [p.z for p in samples] + [t.height for t in tangencies]
    sc = _Scale(xs, zs, equal=True)
    out = _header(title)
    out += _frame(sc, "x", "z")
    out.append(f'<line class="axis" x1="{_f(sc(0, sc.y0)[0])}" y1="{_f(sc(0, sc.y0)[1])}" '
               f'x2="{_f(sc(0, sc.y1)[0])}" y2="{_f(sc(0, sc.y1)[1])}" stroke="black" '
               f'stroke-width="0.8" stroke-dasharray="4 3"/>')
    for t in tangencies:
        (x1, y), (x2, _) = sc(sc.x0, t.height), sc(sc.x1, t.height)
        out.append(f'<line class="horosphere" x1="{_f(x1)}" y1="{_f(y)}" x2="{_f(x2)}" '
                   f'y2="{_f(y)}" stroke="#2ca02c" stroke-width="1"/>')
    out.append(_polyline([sc(-p.x, p.z) for p in samples], "profile-mirror", "#1f77b4", 1.0, "2 2"))
    out.append(_polyline([sc(p.x, p.z) for p in samples], "profile", "#1f77b4", 2.0))
    for t in tangencies:
        px, py = sc(t.x, t.height)
        up = t.direction.value == "up"
        tip = py - 22 if up else py + 22
        head = tip + 6 if up else tip - 6
        out.append(f'<circle class="tangency" cx="{_f(px)}" cy="{_f(py)}" r="4" fill="#d62728"/>')
        out.append(f'<path class="arrow" data-direction="{t.direction.value}" '
                   f'd="M {_f(px)} {_f(py)} L {_f(px)} {_f(tip)} M {_f(px - 4)} {_f(head)} '
                   f'L {_f(px)} {_f(tip)} L {_f(px + 4)} {_f(head)}" stroke="#d62728" '
                   f'stroke-width="1.5" fill="none"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def sweep_svg(series: dict, winners, title: str = "isoperimetric profile") -> str:
    """A(V) chart: one polyline per family label, winners drawn as markers.

    ``series`` maps a label to a list of (V, A); ``winners`` is a list of (V, A).
    """
    pts = [p for s in series.values() for p in s] + list(winners)
    if not pts:
        raise ValueError("nothing to plot")
    sc = _Scale([math.log10(v) for v, _ in pts], [a for _, a in pts])
    out = _header(title)
    out += _frame(sc, "log10 volume", "free boundary area")
    for i, label in enumerate(sorted(series)):
        color = PALETTE[i % len(PALETTE)]
        data = sorted(series[label])
        out.append(f'<g class="family" data-label="{escape(label)}">')
        out.append(_polyline([sc(math.log10(v), a) for v, a in data], "family-curve", color))
        out.append(f'<text class="legend" x="{WIDTH - MARGIN - 5}" y="{MARGIN + 15 + 14 * i}" '
                   f'font-size="11" text-anchor="end" fill="{color}">{escape(label)}</text>')
        out.append("</g>")
    for v, a in winners:
        px, py = sc(math.log10(v), a)
        out.append(f'<circle class="winner" cx="{_f(px)}" cy="{_f(py)}" r="3.5" fill="none" '
                   f'stroke="black" stroke-width="1.5"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
