"""SVG pictures of 2-page and rerouted drawings.

Pictures are evidence only; no crossing count is ever taken from geometry.
Circle layout: spine as a regular n-gon, North chords inside, South chords
as arcs outside. Linear layout: spine on a horizontal line, North above,
South below.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .core import Page, PageMatrix, spine_edges
from .rerouted import ExtendedDiagram, as_extended

NORTH_COLOR = "#1f5fbf"
SOUTH_COLOR = "#c0392b"


@dataclass(frozen=True)
class RenderSpec:
    layout: str = "circle"  # "circle" | "linear"
    size: int = 600
    stroke: float = 1.2
    labels: bool = True

    def __post_init__(self) -> None:
        if self.layout not in ("circle", "linear"):
            raise ValueError(f"unknown layout {self.layout!r}")
        if self.size <= 0:
            raise ValueError("canvas size must be positive")


def _fmt(x: float) -> str:
    return f"{x:.2f}"


class _Canvas:
    def __init__(self, d: ExtendedDiagram, spec: RenderSpec):
        self.d, self.spec = d, spec
        pos = d.positions()
        self.slots = len(pos)
        self.pos = pos
        s = spec.size
        self.cx = self.cy = s / 2
        self.r = s * 0.3

    # positions are continuous along the spine so w points sit on their spine edge
    def point(self, label) -> tuple[float, float]:
        t = self.pos[label]
        if self.spec.layout == "circle":
            n = self.d.n
            # fraction along the n-gon: vertices at integer steps, w points between
            v_before = max(v for v in range(1, n + 1) if self.pos[v] <= t)
            nxt = v_before + 1 if v_before < n else 1
            span = (self.pos[nxt] if nxt != 1 else self.slots) - self.pos[v_before]
            frac = (t - self.pos[v_before]) / span
            a = self._corner(v_before)
            b = self._corner(nxt)
            return a[0] + frac * (b[0] - a[0]), a[1] + frac * (b[1] - a[1])
        step = self.spec.size * 0.9 / max(self.slots - 1, 1)
        return self.spec.size * 0.05 + t * step, self.cy

    def _corner(self, v: int) -> tuple[float, float]:
        ang = -math.pi / 2 + 2 * math.pi * (v - 1) / self.d.n
        return self.cx + self.r * math.cos(ang), self.cy + self.r * math.sin(ang)

    def arc_path(self, a, b, page: int) -> str:
        (x1, y1), (x2, y2) = self.point(a), self.point(b)
        if self.spec.layout == "linear":
            h = abs(x2 - x1) * 0.5
            cy = self.cy - h if page == Page.NORTH else self.cy + h
            return f"M {_fmt(x1)} {_fmt(y1)} Q {_fmt((x1 + x2) / 2)} {_fmt(cy)} {_fmt(x2)} {_fmt(y2)}"
        if page == Page.NORTH:
            return f"M {_fmt(x1)} {_fmt(y1)} L {_fmt(x2)} {_fmt(y2)}"
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        dx, dy = mx - self.cx, my - self.cy
        norm = math.hypot(dx, dy)
        if norm < 1e-9:  # diameter: bulge perpendicular to it
            dx, dy, norm = -(y2 - y1), x2 - x1, math.hypot(x2 - x1, y2 - y1)
        chord_len = math.hypot(x2 - x1, y2 - y1)
        push = self.r + chord_len * 0.45
        qx, qy = self.cx + dx / norm * push, self.cy + dy / norm * push
        return f"M {_fmt(x1)} {_fmt(y1)} Q {_fmt(qx)} {_fmt(qy)} {_fmt(x2)} {_fmt(y2)}"


def render_svg(d: Union[PageMatrix, ExtendedDiagram], spec: RenderSpec = RenderSpec()) -> str:
    d = as_extended(d)
    cv = _Canvas(d, spec)
    n, s, sw = d.n, spec.size, spec.stroke
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{s}" height="{s}" viewBox="0 0 {s} {s}">',
        f'<rect width="{s}" height="{s}" fill="white"/>',
    ]
    removed = d.removed
    for c, p in d.base.items():
        if c in removed:
            continue
        side = "north" if p == Page.NORTH else "south"
        color = NORTH_COLOR if p == Page.NORTH else SOUTH_COLOR
        out.append(
            f'<path class="chord {side}" data-edge="{c.i}-{c.j}" d="{cv.arc_path(c.i, c.j, p)}" '
            f'fill="none" stroke="{color}" stroke-width="{sw}"/>'
        )
    for r in d.reroutes:
        w = ("w", r.chord)
        for v, page, side, color in (
            (r.north_endpoint, Page.NORTH, "north", NORTH_COLOR),
            (r.south_endpoint, Page.SOUTH, "south", SOUTH_COLOR),
        ):
            out.append(
                f'<path class="half-arc {side}" data-edge="{r.chord.i}-{r.chord.j}" '
                f'd="{cv.arc_path(v, w, page)}" fill="none" stroke="{color}" '
                f'stroke-width="{sw * 1.5}" stroke-dasharray="6 3"/>'
            )
    for a, b in spine_edges(n):
        (x1, y1), (x2, y2) = cv.point(a), cv.point(b)
        if spec.layout == "linear" and (a, b) == (1, n):
            lift = s * 0.45
            d_attr = f"M {_fmt(x1)} {_fmt(y1)} C {_fmt(x1)} {_fmt(y1 + lift)} {_fmt(x2)} {_fmt(y2 + lift)} {_fmt(x2)} {_fmt(y2)}"
        else:
            d_attr = f"M {_fmt(x1)} {_fmt(y1)} L {_fmt(x2)} {_fmt(y2)}"
        out.append(f'<path class="spine" data-edge="{a}-{b}" d="{d_attr}" fill="none" stroke="black" stroke-width="{sw * 2.5}"/>')
    for r in d.reroutes:
        x, y = cv.point(("w", r.chord))
        out.append(f'<circle class="pierce" cx="{_fmt(x)}" cy="{_fmt(y)}" r="{sw * 3}" fill="orange" stroke="black"/>')
    for v in range(1, n + 1):
        x, y = cv.point(v)
        out.append(f'<circle class="vertex" cx="{_fmt(x)}" cy="{_fmt(y)}" r="{sw * 3.5}" fill="black"/>')
        if spec.labels:
            out.append(f'<text class="label" x="{_fmt(x + 6)}" y="{_fmt(y - 6)}" font-size="12">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
