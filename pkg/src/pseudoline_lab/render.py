"""SVG output: wiring diagrams and deltoid drawings.

Output is built as plain strings with fixed-precision numbers, so a given
input and option set always yields the same bytes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constructions import DeltoidArrangement, deltoid_lines
from .errors import TooManyWires
from .seqcore import AllowableSequence

MAX_WIRES = 64


@dataclass(frozen=True)
class WiringOptions:
    wire_gap: float = 30
    step_gap: float = 60
    labels: bool = True
    margin: float = 30


@dataclass(frozen=True)
class DeltoidOptions:
    size: float = 600
    extent: float = 2.5  # half-width of the clipping box, in circle radii
    show_polygon: bool = True


def _f(x):
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _header(w, h):
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(w)}" height="{_f(h)}" '
        f'viewBox="0 0 {_f(w)} {_f(h)}">',
    ]


def wiring_svg(seq: AllowableSequence, opts: WiringOptions = WiringOptions()) -> str:
    """Wiring diagram: one horizontal wire per element, one station per move.

    Permutation t is held flat on [X_t - q, X_t + q] with q = step_gap / 4;
    between X_t and X_{t+1} each reversed block's wires run straight to
    their mirrored positions, so they all meet at the block's centre.
    Position 1 is the top wire.
    """
    n = seq.n
    if n > MAX_WIRES:
        raise TooManyWires(f"{n} wires exceeds the cap of {MAX_WIRES}")
    g, s, m = opts.wire_gap, opts.step_gap, opts.margin
    lab = 20 if opts.labels else 0
    q = s / 4
    h = seq.half_period
    xs = [m + lab + q + t * s for t in range(h + 1)]
    width = xs[-1] + q + lab + m
    height = 2 * m + (n - 1) * g

    def y(pos):  # pos is 0-based
        return m + pos * g

    pts = {e: [] for e in range(1, n + 1)}
    for t, perm in enumerate(seq.permutations):
        for pos, e in enumerate(perm):
            pts[e].append((xs[t] - q, y(pos)))
            pts[e].append((xs[t] + q, y(pos)))

    out = _header(width, height)
    out.append('<g id="wires" fill="none" stroke="black" stroke-width="1.5">')
    for e in range(1, n + 1):
        path = " ".join(f"{_f(a)},{_f(b)}" for a, b in pts[e])
        out.append(f'<polyline id="w{e}" points="{path}"/>')
    out.append("</g>")

    out.append('<g id="crossings" fill="red" stroke="none">')
    for mv in seq.moves:
        cx = (xs[mv.step] + xs[mv.step + 1]) / 2
        for ordinal, b in enumerate(mv.blocks):
            cy = y((b.start - 1 + b.stop - 1) / 2)
            r = 3 if b.size == 2 else 4.5
            out.append(
                f'<circle id="v{mv.step}_{ordinal}" class="m{b.size}" '
                f'cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(r)}"/>'
            )
    out.append("</g>")

    if opts.labels:
        out.append('<g id="labels" font-family="sans-serif" font-size="12" '
                   'dominant-baseline="middle">')
        for pos, e in enumerate(seq.permutations[0]):
            out.append(f'<text class="left" x="{_f(m)}" y="{_f(y(pos))}">{e}</text>')
        for pos, e in enumerate(seq.permutations[-1]):
            out.append(f'<text class="right" x="{_f(width - m - lab / 2)}" '
                       f'y="{_f(y(pos))}">{e}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _clip(p, d, r):
    """Segment of the line p + t*d inside the box [-r, r]^2 (Liang-Barsky)."""
    lo, hi = -math.inf, math.inf
    for pc, dc in ((p[0], d[0]), (p[1], d[1])):
        if abs(dc) < 1e-15:
            if not -r <= pc <= r:
                return None
            continue
        t1, t2 = (-r - pc) / dc, (r - pc) / dc
        lo, hi = max(lo, min(t1, t2)), min(hi, max(t1, t2))
    if lo > hi:
        return None
    return (p[0] + lo * d[0], p[1] + lo * d[1]), (p[0] + hi * d[0], p[1] + hi * d[1])


def deltoid_svg(d: DeltoidArrangement, opts: DeltoidOptions = DeltoidOptions()) -> str:
    """Unit circle, the regular n-gon p_0..p_{n-1}, and the n deltoid lines
    clipped to a square box. Tangent lines carry class ``tangent``."""
    size, r = opts.size, opts.extent
    scale = size / (2 * r)

    def tx(x, y):
        return (x + r) * scale, (r - y) * scale

    out = _header(size, size)
    cx, cy = tx(0, 0)
    out.append(f'<circle id="circle" cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(scale)}" '
               'fill="none" stroke="#999" stroke-width="1"/>')
    out.append('<g id="lines" stroke="black" stroke-width="1">')
    for i, (p, v, tan) in enumerate(deltoid_lines(d.n)):
        seg = _clip(p, v, r)
        if seg is None:
            continue
        (x1, y1), (x2, y2) = tx(*seg[0]), tx(*seg[1])
        cls = "tangent" if tan else "chord"
        out.append(f'<line id="l{i}" class="{cls}" x1="{_f(x1)}" y1="{_f(y1)}" '
                   f'x2="{_f(x2)}" y2="{_f(y2)}"/>')
    out.append("</g>")
    if opts.show_polygon:
        out.append('<g id="polygon" fill="blue">')
        for i in range(d.n):
            a = 2 * math.pi * i / d.n
            px, py = tx(math.cos(a), math.sin(a))
            out.append(f'<circle id="p{i}" cx="{_f(px)}" cy="{_f(py)}" r="3"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
