"""SVG pictures of a diagram: the square, then one lifted strip per class."""
from math import floor

from . import diagram as dg

SCALE = 160
PAD = 20


def _n(x):
    return f"{float(x):.6g}"


def _clip(p, q, x0, x1, y0, y1):
    """Liang-Barsky clip of segment pq (floats) to a box."""
    (px, py), (qx, qy) = p, q
    dx, dy = qx - px, qy - py
    t0, t1 = 0.0, 1.0
    for a, b in ((-dx, px - x0), (dx, x1 - px), (-dy, py - y0), (dy, y1 - py)):
        if a == 0:
            if b < 0:
                return None
            continue
        r = b / a
        if a < 0:
            t0 = max(t0, r)
        else:
            t1 = min(t1, r)
        if t0 > t1:
            return None
    return (px + t0 * dx, py + t0 * dy), (px + t1 * dx, py + t1 * dy)


class _Canvas:
    def __init__(self):
        self.items = []
        self.height = 0

    def frame(self, x0, x1, y0, y1, width):
        """Map a box in the plane to the next band of the picture (y up)."""
        s = width / (x1 - x0)
        top = self.height + PAD
        h = (y1 - y0) * s
        self.height = top + h

        def f(p):
            return (PAD + (p[0] - x0) * s, top + (y1 - p[1]) * s)
        return f, h


def render_svg(D):
    D = dg.canonical(D)
    C = _Canvas()
    out = []
    # fundamental square
    f, h = C.frame(0.0, 1.0, 0.0, 1.0, SCALE * 2)
    a, b = f((0, 0)), f((1, 1))
    out.append(f'<rect class="square" x="{_n(a[0])}" y="{_n(b[1])}" width="{_n(b[0] - a[0])}" '
               f'height="{_n(a[1] - b[1])}" fill="none" stroke="black"/>')
    l, r = f((0, 0.5)), f((1, 0.5))
    out.append(f'<line class="alpha" x1="{_n(l[0])}" y1="{_n(l[1])}" x2="{_n(r[0])}" y2="{_n(r[1])}" '
               f'stroke="red" stroke-width="2"/>')
    for p, q in D.segments():
        pf, qf = (float(p[0]), float(p[1])), (float(q[0]), float(q[1]))
        for i in range(floor(min(pf[0], qf[0])) - 1, floor(max(pf[0], qf[0])) + 1):
            for j in range(floor(min(pf[1], qf[1])) - 1, floor(max(pf[1], qf[1])) + 1):
                c = _clip((pf[0] - i, pf[1] - j), (qf[0] - i, qf[1] - j), 0.0, 1.0, 0.0, 1.0)
                if c and c[0] != c[1]:
                    u, v = f(c[0]), f(c[1])
                    out.append(f'<line class="beta" x1="{_n(u[0])}" y1="{_n(u[1])}" '
                               f'x2="{_n(v[0])}" y2="{_n(v[1])}" stroke="blue"/>')
    for x in (0, 1):
        for y in (0, 1):
            u = f((x, y))
            out.append(f'<circle class="z" cx="{_n(u[0])}" cy="{_n(u[1])}" r="4" fill="black"/>')
    u = f((float(D.w[0]), float(D.w[1])))
    out.append(f'<circle class="w" cx="{_n(u[0])}" cy="{_n(u[1])}" r="4" fill="white" stroke="black"/>')
    # lifted strips
    for c in sorted(dg._classes(D)):
        pts = dg.class_points(D, c)
        verts = [P.point for P in pts]
        for P, Q in zip(pts, pts[1:]):
            verts += dg.arc_vertices(D, P, Q)
        lead = dg.lifted_vertex(D, floor(pts[0].param), c)
        tail = dg.lifted_vertex(D, floor(pts[-1].param) + 1, c)
        verts += [lead, tail]
        xs = [float(v[0]) for v in verts]
        ys = [float(v[1]) for v in verts]
        x0, x1 = min(xs) - 0.25, max(xs) + 0.25
        y0, y1 = min(ys) - 0.25, max(ys) + 0.25
        f, h = C.frame(x0, x1, y0, y1, SCALE * 3)
        out.append(f'<g class="strip" data-class="{c}">')
        for bg in dg.bigons(D, c):
            loop = dg.connecting_loop(D, bg.source, bg.target)
            colour = "#ffd8a8" if bg.upper else "#c5e3ff"
            ptxt = " ".join(f"{_n(f(v)[0])},{_n(f(v)[1])}" for v in loop)
            out.append(f'<polygon class="bigon" points="{ptxt}" fill="{colour}" stroke="none"/>')
        l, r = f((x0, 0.5)), f((x1, 0.5))
        out.append(f'<line class="alpha" x1="{_n(l[0])}" y1="{_n(l[1])}" x2="{_n(r[0])}" '
                   f'y2="{_n(r[1])}" stroke="red" stroke-width="2"/>')
        path = [lead]
        for J in range(floor(pts[0].param) + 1, floor(pts[-1].param) + 1):
            path.append(dg.lifted_vertex(D, J, c))
        path.append(tail)
        ptxt = " ".join(f"{_n(f(v)[0])},{_n(f(v)[1])}" for v in path)
        out.append(f'<polyline class="beta" points="{ptxt}" fill="none" stroke="blue"/>')
        for base, cls in (((0.0, 0.0), "z"), ((float(D.w[0]), float(D.w[1])), "w")):
            for i in range(floor(x0 - base[0]), floor(x1 - base[0]) + 1):
                for j in range(floor(y0 - base[1]), floor(y1 - base[1]) + 1):
                    x, y = base[0] + i, base[1] + j
                    if x0 <= x <= x1 and y0 <= y <= y1:
                        u = f((x, y))
                        fill = "black" if cls == "z" else "white"
                        out.append(f'<circle class="{cls}" cx="{_n(u[0])}" cy="{_n(u[1])}" r="3" '
                                   f'fill="{fill}" stroke="black"/>')
        for P in pts:
            u = f(P.point)
            out.append(f'<circle class="intersection" cx="{_n(u[0])}" cy="{_n(u[1])}" r="3" '
                       f'fill="{"green" if P.sign > 0 else "purple"}"/>')
        out.append("</g>")
    width = SCALE * 3 + 2 * PAD
    height = C.height + PAD
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{_n(width)}" height="{_n(height)}" '
            f'viewBox="0 0 {_n(width)} {_n(height)}">')
    return "\n".join([head] + out + ["</svg>"]) + "\n"
