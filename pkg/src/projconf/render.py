"""Static SVG figures in the affine chart z = 1.

Geometry stays exact until emission: vertices are integer triples and
conics are integer matrices. Floats appear only when coordinates are
written into the SVG.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence
from xml.sax.saxutils import quoteattr

from . import kernels as K
from .conics import Conic, conic_through_5, dual_conic, on_conic
from .core import HomogeneousVector, Space, meet, join
from .errors import ProjconfError
from .polygons import Polygon, apply_word, diagonal_map, sides
from .sampling import rng_for

CONIC_SEGMENTS = 256
FIGURES = ("pappus", "pascal", "brianchon", "octagon-21212", "decagon-1313", "pentagram")

GREEN = "#2e8b57"
BLUE = "#1f5fbf"
RED = "#c0392b"
GREY = "#777777"


class RenderError(ProjconfError):
    """Nothing in the scene lands in the affine chart."""


@dataclass
class Style:
    stroke: str = "black"
    fill: str = "none"
    width: float = 1.5
    dashed: bool = False
    radius: float = 3.5

    def attrs(self, scale: float) -> str:
        out = f'stroke="{self.stroke}" stroke-width="{self.width / scale:.6g}" fill="{self.fill}"'
        if self.dashed:
            d = 6 / scale
            out += f' stroke-dasharray="{d:.6g},{d:.6g}"'
        return out

    @classmethod
    def from_dict(cls, d: dict | None) -> "Style":
        return cls(**(d or {}))


@dataclass
class RenderScene:
    """Things to draw; ``viewport`` is (xmin, ymin, xmax, ymax) or None for automatic."""

    polygons: list[tuple[Polygon, Style]] = field(default_factory=list)
    conics: list[tuple[Conic, Style]] = field(default_factory=list)
    lines: list[tuple[tuple[int, int, int], Style]] = field(default_factory=list)
    points: list[tuple[tuple[int, int, int], Style]] = field(default_factory=list)
    viewport: tuple[float, float, float, float] | None = None
    size: tuple[int, int] = (600, 600)
    title: str = ""
    warnings: list[str] = field(default_factory=list)

    def add_polygon(self, P: Polygon, **style):
        self.polygons.append((P, Style(**style)))

    def add_conic(self, C: Conic, **style):
        self.conics.append((C, Style(**style)))

    def add_line(self, l, **style):
        self.lines.append((tuple(l), Style(**style)))

    def add_point(self, p, **style):
        self.points.append((tuple(p), Style(**style)))

    @classmethod
    def from_dict(cls, d: dict) -> "RenderScene":
        def triple(v):
            return tuple(int(x) for x in v)

        sc = cls(size=tuple(d.get("size", (600, 600))), title=d.get("title", ""))
        if d.get("viewport"):
            sc.viewport = tuple(float(x) for x in d["viewport"])
        for p in d.get("polygons", []):
            verts = [K.canon(*triple(v)) for v in p["vertices"]]
            sc.polygons.append((Polygon(tuple(verts), Space.parse(p.get("space", "P"))), Style.from_dict(p.get("style"))))
        for c in d.get("conics", []):
            C = Conic.from_coefficients([int(x) for x in c["coefficients"]])
            sc.conics.append((C, Style.from_dict(c.get("style"))))
        for l in d.get("lines", []):
            sc.lines.append((triple(l["coords"]), Style.from_dict(l.get("style"))))
        for p in d.get("points", []):
            sc.points.append((triple(p["coords"]), Style.from_dict(p.get("style"))))
        return sc


# --- chart geometry -------------------------------------------------------

def _chart(v) -> tuple[float, float] | None:
    x, y, z = v
    if z == 0:
        return None
    return float(Fraction(x, z)), float(Fraction(y, z))


def _polygon_points(P: Polygon) -> list[tuple[int, int, int]]:
    # a polygon of lines is drawn through its vertices, the meets of consecutive sides
    if P.space is Space.P:
        return list(P.coords)
    return [v.coords for v in sides(P)]


def _conic_samples(C: Conic, anchor=None) -> list[tuple[float, float, float]]:
    """Second intersections of C with a pencil of lines through a point of C."""
    S = [float(x) for x in C.matrix]
    p0 = anchor or _float_point_on(C)
    if p0 is None:
        return []

    def bil(u, v):
        return sum(u[i] * S[3 * i + j] * v[j] for i in range(3) for j in range(3))

    out = []
    for s in range(CONIC_SEGMENTS + 1):
        th = math.pi * s / CONIC_SEGMENTS
        r = (math.cos(th), math.sin(th), 0.0)
        b = bil(p0, r)
        c = bil(r, r)
        out.append(tuple(-c * p0[i] + 2 * b * r[i] for i in range(3)))
    return out


def _float_point_on(C: Conic):
    a, b, c, d, e, f = (float(x) for x in C.coefficients())
    # intersect with vertical lines x = t (z = 1) until a real root appears
    for t in [0.0] + [s * k for k in (0.5, 1, 2, 4, 8, 16) for s in (1, -1)]:
        A, B, Cc = b, d * t + f, a * t * t + e * t + c
        if abs(A) < 1e-12:
            if abs(B) > 1e-12:
                return (t, -Cc / B, 1.0)
            continue
        disc = B * B - 4 * A * Cc
        if disc >= 0:
            return (t, (-B + math.sqrt(disc)) / (2 * A), 1.0)
    return None


def _clip_line(l, box):
    a, b, c = (float(x) for x in l)
    xmin, ymin, xmax, ymax = box
    pts = []
    if abs(b) > 1e-300:
        for x in (xmin, xmax):
            y = -(a * x + c) / b
            if ymin - 1e-9 <= y <= ymax + 1e-9:
                pts.append((x, y))
    if abs(a) > 1e-300:
        for y in (ymin, ymax):
            x = -(b * y + c) / a
            if xmin - 1e-9 <= x <= xmax + 1e-9:
                pts.append((x, y))
    pts = sorted(set(pts))
    return (pts[0], pts[-1]) if len(pts) >= 2 else None


# --- emission -----------------------------------------------------------

def _auto_viewport(scene: RenderScene) -> tuple[float, float, float, float]:
    pts = []
    for P, _ in scene.polygons:
        pts += [q for q in map(_chart, _polygon_points(P)) if q]
    pts += [q for q in (_chart(p) for p, _ in scene.points) if q]
    if not pts:
        for C, _ in scene.conics:
            pts += [(x / z, y / z) for x, y, z in _conic_samples(C) if abs(z) > 1e-9]
    if not pts:
        raise RenderError("no finite content in the chart z = 1")
    xs, ys = [p[0] for p in pts], [p[1] for p in pts]
    w = max(xs) - min(xs) or 1.0
    h = max(ys) - min(ys) or 1.0
    m = 0.15 * max(w, h)
    return min(xs) - m, min(ys) - m, max(xs) + m, max(ys) + m


def _inside(p, box, slack=0.0):
    xmin, ymin, xmax, ymax = box
    w, h = xmax - xmin, ymax - ymin
    return xmin - slack * w <= p[0] <= xmax + slack * w and ymin - slack * h <= p[1] <= ymax + slack * h


def render_svg(scene: RenderScene) -> str:
    box = scene.viewport or _auto_viewport(scene)
    xmin, ymin, xmax, ymax = box
    if not (xmax > xmin and ymax > ymin):
        raise RenderError("empty viewport")
    W, H = scene.size
    scale = min(W / (xmax - xmin), H / (ymax - ymin))
    visible = 0

    def warn(msg):
        scene.warnings.append(msg)
        warnings.warn(msg, stacklevel=3)

    body = []
    for C, st in scene.conics:
        run: list[tuple[float, float]] = []
        runs = [run]
        for x, y, z in _conic_samples(C):
            p = (x / z, y / z) if abs(z) > 1e-12 else None
            if p is None or not _inside(p, box, 2.0):
                if run:
                    run = []
                    runs.append(run)
                continue
            run.append(p)
        for r in runs:
            if len(r) > 1:
                visible += sum(_inside(p, box) for p in r)
                body.append(f'<polyline points="{_fmt(r)}" {st.attrs(scale)}/>')
    for l, st in scene.lines:
        seg = _clip_line(l, box)
        if seg:
            visible += 1
            body.append(f'<polyline points="{_fmt(seg)}" {st.attrs(scale)}/>')
    for P, st in scene.polygons:
        pts = []
        for v in _polygon_points(P):
            q = _chart(v)
            if q is None:
                warn(f"vertex {v} is at infinity in the chart; clipped")
                continue
            pts.append(q)
        visible += sum(_inside(p, box) for p in pts)
        if len(pts) > 1:
            body.append(f'<polygon points="{_fmt(pts)}" {st.attrs(scale)}/>')
    for v, st in scene.points:
        q = _chart(v)
        if q is None:
            warn(f"point {v} is at infinity in the chart; clipped")
            continue
        visible += _inside(q, box)
        fill = st.fill if st.fill != "none" else st.stroke
        body.append(f'<circle cx="{q[0]:.6g}" cy="{q[1]:.6g}" r="{st.radius / scale:.6g}" '
                    f'fill="{fill}" stroke="none"/>')
    if not visible:
        raise RenderError("all scene content lies outside the chart")
    # flip y so the chart reads with y up
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{W}" height="{H}" '
            f'viewBox="{xmin:.6g} {-ymax:.6g} {xmax - xmin:.6g} {ymax - ymin:.6g}">')
    title = f"<title>{_esc(scene.title)}</title>" if scene.title else ""
    group = f'<g transform="scale(1,-1)" stroke-linejoin="round">{"".join(body)}</g>'
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + head + title + group + "</svg>\n"


def _fmt(pts) -> str:
    return " ".join(f"{x:.6g},{y:.6g}" for x, y in pts)


def _esc(s: str) -> str:
    return quoteattr(s)[1:-1]


# --- the figures --------------------------------------------------------

def circle_point(t: Fraction | int) -> tuple[int, int, int]:
    """Rational point of the unit circle x^2 + y^2 = z^2."""
    t = Fraction(t)
    p, q = t.numerator, t.denominator
    return K.canon(q * q - p * p, 2 * p * q, q * q + p * p)


def _circle_params(n: int, seed, jitter: float = 0.25) -> list[Fraction]:
    # roughly equal angles, perturbed; t = tan(theta / 2)
    rng = rng_for(seed)
    out = []
    for i in range(n):
        th = -math.pi + (2 * math.pi) * (i + 0.5 + jitter * (rng.random() - 0.5)) / n
        out.append(Fraction(math.tan(th / 2)).limit_denominator(64))
    return out


def inscribed_circle_polygon(n: int, seed) -> Polygon:
    return Polygon(tuple(circle_point(t) for t in _circle_params(n, seed)))


def _conic_of(P: Polygon) -> Conic:
    return conic_through_5(list(P.vertices)[:5])


def figure_pappus(seed=0) -> RenderScene:
    rng = rng_for(("pappus", seed))
    xs = [-10 + rng.randrange(4), -2 + rng.randrange(4), 6 + rng.randrange(4)]
    us = [-9 + rng.randrange(4), -1 + rng.randrange(4), 7 + rng.randrange(4)]
    A = [K.canon(x, 0, 1) for x in xs]
    B = [K.canon(5 * u, 50 + u, 5) for u in us]  # on y = 10 + x/5
    sc = RenderScene(title="Pappus")
    sc.add_line(K.cross(A[0], A[2]), stroke=GREY, width=1)
    sc.add_line(K.cross(B[0], B[2]), stroke=GREY, width=1)
    blue = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        l1, l2 = K.cross(A[i], B[j]), K.cross(A[j], B[i])
        sc.add_line(l1, stroke="black", width=0.8)
        sc.add_line(l2, stroke="black", width=0.8)
        blue.append(K.cross(l1, l2))
    sc.add_line(K.cross(blue[0], blue[1]), stroke=BLUE, dashed=True)
    for p in A + B:
        sc.add_point(p, stroke=GREEN)
    for p in blue:
        sc.add_point(p, stroke=BLUE)
    sc.viewport = _pad_box(A + B + blue)
    return sc


def _pad_box(pts, pad=0.2):
    qs = [q for q in map(_chart, pts) if q]
    xs, ys = [q[0] for q in qs], [q[1] for q in qs]
    w, h = max(xs) - min(xs) or 1, max(ys) - min(ys) or 1
    m = pad * max(w, h)
    return min(xs) - m, min(ys) - m, max(xs) + m, max(ys) + m


def _far(p, limit):
    q = _chart(p)
    return q is None or math.hypot(*q) > limit


def figure_pascal(seed=0) -> RenderScene:
    # a self-crossing hexagon keeps the three meets near the circle;
    # redraw until they are
    for attempt in range(500):
        rng = rng_for(("pascal", seed, attempt))
        ts = [Fraction(rng.randint(-40, 40), 16) for _ in range(6)]
        if len(set(ts)) < 6:
            continue
        angles = sorted(2 * math.atan(t) for t in ts)
        gaps = [b - a for a, b in zip(angles, angles[1:] + [angles[0] + 2 * math.pi])]
        if min(gaps) < 0.45:
            continue
        P = Polygon(tuple(circle_point(t) for t in ts))
        S = [s.coords for s in sides(P)]
        blue = [K.cross(S[i], S[i + 3]) for i in range(3)]
        if any(_far(b, 2.0) for b in blue):
            continue
        qs = [_chart(b) for b in blue]
        if min(math.dist(qs[i], qs[j]) for i, j in ((0, 1), (0, 2), (1, 2))) > 0.6:
            break
    sc = RenderScene(title="Pascal")
    sc.add_conic(_conic_of(P), stroke=GREY, dashed=True)
    for l in S:
        sc.add_line(l, stroke=GREY, width=0.6)
    sc.add_polygon(P, stroke=GREEN)
    sc.add_line(K.cross(blue[0], blue[1]), stroke=BLUE)
    for p in blue:
        sc.add_point(p, stroke=BLUE)
    sc.viewport = _pad_box(list(P.coords) + blue, 0.1)
    return sc


def figure_brianchon(seed=0) -> RenderScene:
    P = inscribed_circle_polygon(6, ("brianchon", seed))
    C = _conic_of(P)
    D = C.matrix
    tangents = [K.canon(*K.matvec(D, p)) for p in P.coords]
    outer = Polygon(tuple(K.cross(tangents[i], tangents[(i + 1) % 6]) for i in range(6)))
    sc = RenderScene(title="Brianchon")
    sc.add_conic(C, stroke=GREY, dashed=True)
    sc.add_polygon(outer, stroke=GREEN)
    for i in range(3):
        sc.add_line(K.cross(outer.coords[i], outer.coords[i + 3]), stroke=BLUE, width=1)
    sc.add_point(K.cross(K.cross(outer.coords[0], outer.coords[3]), K.cross(outer.coords[1], outer.coords[4])), stroke=BLUE)
    sc.viewport = _pad_box(outer.coords, 0.1)
    return sc


def figure_octagon_21212(seed=0) -> RenderScene:
    """Inscribed octagon P and the octagon whose sides are the lines of T_21212(P)."""
    P = inscribed_circle_polygon(8, ("octagon", seed))
    Q = apply_word(P, "21212")  # a polygon of lines
    inner = diagonal_map(Q, 1)
    sc = RenderScene(title="inscribed octagon P and T_21212(P)")
    sc.add_conic(_conic_of(P), stroke=GREY, dashed=True)
    sc.add_polygon(P, stroke=GREEN)
    sc.add_polygon(inner, stroke=BLUE)
    try:
        Cq = conic_through_5(list(Q.vertices)[:5])
        sc.add_conic(dual_conic(Cq).__class__(dual_conic(Cq).matrix, Space.P), stroke=BLUE, dashed=True, width=1)
    except ProjconfError:
        sc.warnings.append("inner witness conic degenerate")
    sc.viewport = _pad_box(list(P.coords), 0.15)
    return sc


def figure_decagon_1313(seed=0) -> RenderScene:
    P = inscribed_circle_polygon(10, ("decagon", seed))
    Q = apply_word(P, "1313")
    sc = RenderScene(title="inscribed decagon P and T_1313(P)")
    sc.add_conic(_conic_of(P), stroke=GREY, dashed=True)
    sc.add_polygon(P, stroke=GREEN)
    sc.add_conic(_conic_of(Q), stroke=BLUE, dashed=True, width=1)
    sc.add_polygon(Q, stroke=BLUE)
    sc.viewport = _pad_box(list(P.coords) + list(Q.coords), 0.1)
    return sc


def figure_pentagram(seed=0) -> RenderScene:
    P = inscribed_circle_polygon(5, ("pentagram", seed))
    diag = diagonal_map(P, 2)
    Q = diagonal_map(diag, 1)
    sc = RenderScene(title="pentagon P and T_12(P)")
    sc.add_polygon(P, stroke=GREEN)
    for i in range(5):
        a, b = _chart(P.coords[i]), _chart(P.coords[(i + 2) % 5])
        if a and b:
            sc.add_line(diag.coords[i], stroke=GREY, width=0.8)
    sc.add_polygon(Q, stroke=BLUE, fill="#dbe7f7")
    sc.viewport = _pad_box(list(P.coords), 0.1)
    return sc


FIGURE_BUILDERS = {
    "pappus": figure_pappus,
    "pascal": figure_pascal,
    "brianchon": figure_brianchon,
    "octagon-21212": figure_octagon_21212,
    "decagon-1313": figure_decagon_1313,
    "pentagram": figure_pentagram,
}


def figure(name: str, seed=0) -> RenderScene:
    try:
        return FIGURE_BUILDERS[name](seed)
    except KeyError:
        raise ValueError(f"unknown figure {name!r}; choose from {', '.join(FIGURES)}") from None
