"""Genus one doubly pointed diagrams on R^2/Z^2.

Gauge: alpha lifts to the horizontal lines y = k + 1/2 and z lifts to Z^2.  The beta
curve is stored as one fundamental PL path from P to P + offset; lifted copies are
indexed by integers J with vertex(J) = beta[J mod N] + (J div N) * offset.

A spin^c class c is realised by the lift L_c = (union of copies) + (0, c), and its
points on the fixed alpha~ = {y = 1/2} are the crossings of the stored path with
heights k + 1/2, k = -c (mod |b|).
"""
import json
import random
from bisect import bisect_left, bisect_right
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor, gcd, isqrt

from .errors import (BasepointOnCurve, InternalInconsistency, NonPrimitiveOffset,
                     NotTransverse, OneOneError, SelfIntersecting)
from .lattice import fmt_rational, parse_rational, winding_number, winding_sum

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class OneOneDiagram:
    beta: tuple
    offset: tuple
    w: tuple

    def __post_init__(self):
        object.__setattr__(self, "beta", tuple((Fraction(x), Fraction(y)) for x, y in self.beta))
        object.__setattr__(self, "offset", (int(self.offset[0]), int(self.offset[1])))
        object.__setattr__(self, "w", (Fraction(self.w[0]), Fraction(self.w[1])))

    @property
    def size(self):
        return len(self.beta)

    @property
    def p(self):
        return abs(self.offset[1])

    def vertex(self, J):
        q, r = divmod(J, len(self.beta))
        x, y = self.beta[r]
        return (x + q * self.offset[0], y + q * self.offset[1])

    def segments(self):
        N = len(self.beta)
        return [(self.beta[i], self.vertex(i + 1)) for i in range(N)]

    # serialization -------------------------------------------------------

    def to_dict(self):
        return {
            "beta": [[fmt_rational(x), fmt_rational(y)] for x, y in self.beta],
            "offset": list(self.offset),
            "w": [fmt_rational(self.w[0]), fmt_rational(self.w[1])],
        }

    def to_json(self):
        return json.dumps(self.to_dict()) + "\n"

    @classmethod
    def from_dict(cls, d):
        try:
            beta = [(parse_rational(x), parse_rational(y)) for x, y in d["beta"]]
            off = d["offset"]
            if len(off) != 2 or not all(isinstance(v, int) for v in off):
                raise OneOneError("offset must be two integers")
            w = (parse_rational(d["w"][0]), parse_rational(d["w"][1]))
        except (KeyError, TypeError, ValueError) as e:
            if isinstance(e, OneOneError):
                raise
            raise OneOneError(f"malformed diagram: {e}") from None
        if not beta:
            raise OneOneError("empty beta path")
        return cls(tuple(beta), tuple(off), w)

    @classmethod
    def from_json(cls, text):
        try:
            d = json.loads(text)
        except json.JSONDecodeError as e:
            raise OneOneError(f"malformed JSON: {e}") from None
        if not isinstance(d, dict):
            raise OneOneError("diagram must be a JSON object")
        return cls.from_dict(d)


def load(path):
    with open(path) as fh:
        return validate(OneOneDiagram.from_json(fh.read()))


def save(D, path):
    with open(path, "w") as fh:
        fh.write(D.to_json())


# --------------------------------------------------------------------------
# exact segment predicates


def _orient(a, b, c):
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def _on_seg(p, a, b):
    return (_orient(a, b, p) == 0 and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def _orient_float(a, b, c):
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    scale = (abs(b[0] - a[0]) + abs(b[1] - a[1])) * (abs(c[0] - a[0]) + abs(c[1] - a[1]))
    if abs(v) > 1e-9 * scale + 1e-12:
        return 1 if v > 0 else -1
    return None


def segments_intersect(a, b, c, d):
    fa, fb, fc, fd = [(float(p[0]), float(p[1])) for p in (a, b, c, d)]
    o1, o2 = _orient_float(fa, fb, fc), _orient_float(fa, fb, fd)
    if o1 is not None and o1 == o2:
        return False
    o3, o4 = _orient_float(fc, fd, fa), _orient_float(fc, fd, fb)
    if o3 is not None and o3 == o4:
        return False
    return _segments_intersect_exact(a, b, c, d)


def _segments_intersect_exact(a, b, c, d):
    o1, o2, o3, o4 = _orient(a, b, c), _orient(a, b, d), _orient(c, d, a), _orient(c, d, b)
    if o1 != o2 and o3 != o4:
        return True
    return ((o1 == 0 and _on_seg(c, a, b)) or (o2 == 0 and _on_seg(d, a, b))
            or (o3 == 0 and _on_seg(a, c, d)) or (o4 == 0 and _on_seg(b, c, d)))


def _add(p, v):
    return (p[0] + v[0], p[1] + v[1])


def _sub(p, v):
    return (p[0] - v[0], p[1] - v[1])


class SegmentGrid:
    """Buckets segments of the plane into cells of the unit torus, remembering lifts."""

    def __init__(self, segs, G=None):
        if G is None:
            G = max(4, min(256, 2 * isqrt(len(segs) + 1)))
        self.G = G
        self.segs = segs
        self.cells = defaultdict(list)
        tol = 1e-9
        for i, (p, q) in enumerate(segs):
            px, py, qx, qy = float(p[0]), float(p[1]), float(q[0]), float(q[1])
            k = max(1, ceil(max(abs(qx - px), abs(qy - py)) * G))
            for t in range(k):
                ax, ay = px + (qx - px) * t / k, py + (qy - py) * t / k
                bx, by = px + (qx - px) * (t + 1) / k, py + (qy - py) * (t + 1) / k
                for gx in range(floor((min(ax, bx) - tol) * G), floor((max(ax, bx) + tol) * G) + 1):
                    for gy in range(floor((min(ay, by) - tol) * G), floor((max(ay, by) + tol) * G) + 1):
                        self.cells[(gx % G, gy % G)].append((i, gx // G, gy // G))

    def query(self, x0, x1, y0, y1):
        """All (i, v) such that segment i translated by v may meet the window."""
        G, tol = self.G, 1e-9
        out = set()
        for hx in range(floor((float(x0) - tol) * G), floor((float(x1) + tol) * G) + 1):
            for hy in range(floor((float(y0) - tol) * G), floor((float(y1) + tol) * G) + 1):
                Wx, Wy = hx // G, hy // G
                for i, sx, sy in self.cells.get((hx % G, hy % G), ()):
                    out.add((i, (Wx - sx, Wy - sy)))
        return out

    def candidate_pairs(self):
        seen = set()
        for entries in self.cells.values():
            ents = set(entries)
            if len(ents) < 2:
                continue
            ents = sorted(ents)
            for a in range(len(ents)):
                i, six, siy = ents[a]
                for b in range(a + 1, len(ents)):
                    j, sjx, sjy = ents[b]
                    v = (six - sjx, siy - sjy)
                    if i > j or (i == j and v < (0, 0)):
                        key = (j, i, (-v[0], -v[1]))
                    else:
                        key = (i, j, v)
                    if key[0] == key[1] and key[2] == (0, 0):
                        continue
                    seen.add(key)
        return seen


# --------------------------------------------------------------------------
# normalization and validation


def _clean_path(beta, offset):
    pts = list(beta)
    while len(pts) > 1:
        N = len(pts)

        def V(J):
            q, r = divmod(J, N)
            return (pts[r][0] + q * offset[0], pts[r][1] + q * offset[1])

        drop = None
        for i in range(N):
            prev, cur, nxt = V(i - 1), pts[i], V(i + 1)
            if cur == prev:
                drop = i
                break
            if _orient(prev, cur, nxt) == 0:
                dot = (cur[0] - prev[0]) * (nxt[0] - cur[0]) + (cur[1] - prev[1]) * (nxt[1] - cur[1])
                if dot > 0:
                    drop = i
                    break
        if drop is None:
            break
        if drop == 0:
            # keep the path starting at a genuine vertex: rotate instead of losing the start
            pts = pts[1:] + [(pts[0][0] + offset[0], pts[0][1] + offset[1])]
            pts = pts[:-1]
        else:
            pts.pop(drop)
    return pts


def canonical(D):
    """Collinear vertices removed, first vertex moved into [0,1)^2, w reduced mod Z^2."""
    pts = _clean_path(D.beta, D.offset)
    tx, ty = floor(pts[0][0]), floor(pts[0][1])
    pts = tuple((x - tx, y - ty) for x, y in pts)
    w = (D.w[0] - floor(D.w[0]), D.w[1] - floor(D.w[1]))
    return OneOneDiagram(pts, D.offset, w)


def validate(D):
    a, b = D.offset
    if b == 0:
        raise NonPrimitiveOffset("offset has b = 0: beta is parallel to alpha")
    if gcd(abs(a), abs(b)) != 1:
        raise NonPrimitiveOffset(f"offset {D.offset} is not primitive")
    D = canonical(D)
    wx, wy = D.w
    if (wy - HALF).denominator == 1:
        raise BasepointOnCurve("w lies on alpha")
    if wx.denominator == 1 and wy.denominator == 1:
        raise BasepointOnCurve("w coincides with z")
    for x, y in D.beta:
        if (y - HALF).denominator == 1:
            raise NotTransverse(f"vertex ({x}, {y}) lies on alpha")
    segs = D.segments()
    for p, q in segs:
        if p == q:
            raise SelfIntersecting("zero length edge")
        for base in ((Fraction(0), Fraction(0)), D.w):
            x0 = ceil(min(p[0], q[0]) - base[0])
            x1 = floor(max(p[0], q[0]) - base[0])
            y0 = ceil(min(p[1], q[1]) - base[1])
            y1 = floor(max(p[1], q[1]) - base[1])
            for i in range(x0, x1 + 1):
                for j in range(y0, y1 + 1):
                    if _on_seg((base[0] + i, base[1] + j), p, q):
                        raise BasepointOnCurve(
                            "beta passes through " + ("z" if base[0] == 0 and base[1] == 0 else "w"))
    _check_embedded(D, segs)
    return D


def _check_embedded(D, segs):
    N = len(segs)
    grid = SegmentGrid(segs)
    off = D.offset
    box = [(min(float(p[0]), float(q[0])), max(float(p[0]), float(q[0])),
            min(float(p[1]), float(q[1])), max(float(p[1]), float(q[1]))) for p, q in segs]
    tol = 1e-9
    for i, j, v in grid.candidate_pairs():
        bi, bj = box[i], box[j]
        if (bi[1] < bj[0] + v[0] - tol or bj[1] + v[0] < bi[0] - tol
                or bi[3] < bj[2] + v[1] - tol or bj[3] + v[1] < bi[2] - tol):
            continue
        p, q = segs[i]
        r, s = _add(segs[j][0], v), _add(segs[j][1], v)
        # pairs sharing an endpoint along the path
        adjacent = None
        if j == (i + 1) % N and v == ((0, 0) if j > i else off) and not (N == 1):
            adjacent = (p, q, s)
        elif i == (j + 1) % N and v == ((0, 0) if i > j else (-off[0], -off[1])) and N > 1:
            adjacent = (r, s, q)
        elif N == 1 and i == j == 0 and v in (off, (-off[0], -off[1])):
            adjacent = (p, q, s) if v == off else (r, s, q)
        if adjacent is not None:
            a0, a1, a2 = adjacent
            if _orient(a0, a1, a2) == 0:
                dot = (a1[0] - a0[0]) * (a2[0] - a1[0]) + (a1[1] - a0[1]) * (a2[1] - a1[1])
                if dot <= 0:
                    raise SelfIntersecting("path doubles back on itself")
            continue
        if segments_intersect(p, q, r, s):
            raise SelfIntersecting(f"edges {i} and {j}+{v} meet")


# --------------------------------------------------------------------------
# intersections and classes


@dataclass(frozen=True)
class IntersectionPoint:
    class_id: int
    sign: int
    x: Fraction            # abscissa on alpha~ = {y = 1/2} in the lift L_c
    param: Fraction        # lifted beta parameter: copy * N + edge + u
    edge: int
    beta_parameter: Fraction

    @property
    def alpha_position(self):
        return self.x - floor(self.x)

    @property
    def point(self):
        return (self.x, HALF)


def _crossings(D):
    N = len(D.beta)
    a, b = D.offset
    nb = abs(b)
    out = []
    for i in range(N):
        p, q = D.beta[i], D.vertex(i + 1)
        if p[1] == q[1]:
            continue
        lo, hi = min(p[1], q[1]), max(p[1], q[1])
        sign = 1 if q[1] > p[1] else -1
        for k in range(ceil(lo - HALF), floor(hi - HALF) + 1):
            u = (k + HALF - p[1]) / (q[1] - p[1])
            X = p[0] + u * (q[0] - p[0])
            c = (-k) % nb
            n = (-c - k) // b
            out.append(IntersectionPoint(c, sign, X + n * a, n * N + i + u, i, i + u))
    return out


@lru_cache(maxsize=256)
def _classes(D):
    cls = defaultdict(list)
    for pt in _crossings(D):
        cls[pt.class_id].append(pt)
    for c in cls:
        cls[c].sort(key=lambda t: t.param)
    return {c: tuple(cls[c]) for c in sorted(cls)}


def intersections(D):
    """All intersection points, grouped by class and ordered along alpha~ within a class."""
    out = []
    for c, pts in _classes(D).items():
        out.extend(sorted(pts, key=lambda t: t.x))
    return out


def class_points(D, class_id):
    """Points of one class ordered along the lifted beta."""
    return list(_classes(D).get(class_id, ()))


def num_classes(D):
    return len(_classes(D))


def lifted_vertex(D, J, class_id):
    x, y = D.vertex(J)
    return (x, y + class_id)


def arc_vertices(D, P, Q):
    """Vertices of the lifted beta strictly between points P and Q (P before Q)."""
    c = P.class_id
    return [lifted_vertex(D, J, c) for J in range(floor(P.param) + 1, floor(Q.param) + 1)]


def connecting_loop(D, x, y):
    """alpha~ segment from x to y followed by the beta~ arc from y back to x."""
    if x.param < y.param:
        arc = arc_vertices(D, x, y)[::-1]
    else:
        arc = arc_vertices(D, y, x)
    return [x.point, y.point] + arc


def multiplicities(D, loop):
    return winding_sum(loop, (0, 0)), winding_sum(loop, D.w)


def _area2(loop):
    s = 0
    n = len(loop)
    for i in range(n):
        a, b = loop[i], loop[(i + 1) % n]
        s += a[0] * b[1] - a[1] * b[0]
    return s


# --------------------------------------------------------------------------
# bigons


@dataclass(frozen=True)
class Bigon:
    class_id: int
    first: IntersectionPoint     # earlier corner along beta~
    second: IntersectionPoint
    upper: bool
    n_z: int
    n_w: int
    area: Fraction

    @property
    def half_plane(self):
        return "upper" if self.upper else "lower"

    @property
    def source(self):
        left, right = sorted((self.first, self.second), key=lambda t: t.x)
        return left if self.upper else right

    @property
    def target(self):
        left, right = sorted((self.first, self.second), key=lambda t: t.x)
        return right if self.upper else left

    @property
    def decreasing(self):
        """True when the corners appear in decreasing alpha order along beta."""
        return self.second.x < self.first.x


def _make_bigon(D, P, Q):
    upper = P.sign > 0
    b = Bigon(P.class_id, P, Q, upper, 0, 0, Fraction(0))
    loop = connecting_loop(D, b.source, b.target)
    a2 = _area2(loop)
    if a2 <= 0:
        raise InternalInconsistency("bigon boundary is not counterclockwise")
    nz, nw = multiplicities(D, loop)
    if nz < 0 or nw < 0:
        raise InternalInconsistency("negative bigon multiplicity")
    return Bigon(P.class_id, P, Q, upper, nz, nw, a2 / 2)


@lru_cache(maxsize=256)
def _bigons(D, class_id):
    pts = class_points(D, class_id)
    return tuple(_make_bigon(D, P, Q) for P, Q in zip(pts, pts[1:]))


def bigons(D, class_id=None):
    if class_id is None:
        return [bg for c in _classes(D) for bg in _bigons(D, c)]
    return list(_bigons(D, class_id))


def is_reduced(D):
    return all(bg.n_z + bg.n_w >= 1 for bg in bigons(D))


# --------------------------------------------------------------------------
# verdicts

POSITIVE, NEGATIVE, BOTH, INCOHERENT = "Positive", "Negative", "Both", "Incoherent"


def graphic_sign(D, class_id):
    pts = class_points(D, class_id)
    if D.offset[1] < 0:
        pts = pts[::-1]
    if len(pts) == 1:
        return "either"
    xs = [t.x for t in pts]
    if all(u > v for u, v in zip(xs, xs[1:])):
        return "positive"
    if all(u < v for u, v in zip(xs, xs[1:])):
        return "negative"
    return "none"


def coherence(D):
    bgs = bigons(D)
    if not bgs:
        return BOTH
    sb = 1 if D.offset[1] > 0 else -1
    signs = set()
    for ea in (1, -1):
        for eb in (1, -1):
            # a bigon's boundary is coherent iff the beta arc runs against the alpha
            # direction (relative to the chosen orientations)
            ok = all((-1 if bg.decreasing else 1) == -ea * eb for bg in bgs)
            if ok:
                signs.add(ea * eb * sb)
    if not signs:
        return INCOHERENT
    if len(signs) > 1:
        raise InternalInconsistency("both orientation products succeed with bigons present")
    return POSITIVE if signs.pop() > 0 else NEGATIVE


def coherence_from_graphic(D):
    """The same verdict assembled from class-wise graphic signs."""
    gs = [graphic_sign(D, c) for c in _classes(D)]
    if all(g == "either" for g in gs):
        return BOTH
    if all(g in ("positive", "either") for g in gs):
        return POSITIVE
    if all(g in ("negative", "either") for g in gs):
        return NEGATIVE
    return INCOHERENT


# --------------------------------------------------------------------------
# simple transformations


def reflect(D):
    """Reflect in the line y = 1/2 (orientation reversing: mirrors the knot)."""
    beta = [(x, 1 - y) for x, y in D.beta]
    return canonical(OneOneDiagram(beta, (D.offset[0], -D.offset[1]), (D.w[0], 1 - D.w[1])))


def rotate_start(D, k):
    """Same curve with the stored path starting at vertex k."""
    N = len(D.beta)
    beta = [D.vertex(J) for J in range(k, k + N)]
    return OneOneDiagram(beta, D.offset, D.w)


def translate(D, v):
    beta = [(x + v[0], y + v[1]) for x, y in D.beta]
    return OneOneDiagram(beta, D.offset, (D.w[0] + v[0], D.w[1] + v[1]))


# --------------------------------------------------------------------------
# reduction


def _edges_near(D, grid, x0, x1, y0, y1):
    segs = grid.segs
    for i, v in grid.query(x0, x1, y0, y1):
        p, q = segs[i]
        yield i, v, _add(p, v), _add(q, v)


def _innermost_empty(D):
    cls = _classes(D)
    allpos = sorted(pt.alpha_position for pts in cls.values() for pt in pts)
    L = len(allpos)
    out = []
    for c, pts in cls.items():
        for P, Q in zip(pts, pts[1:]):
            xl, xr = min(P.x, Q.x), max(P.x, Q.x)
            width = xr - xl
            if width >= 1:
                continue
            a = xl - floor(xl)
            if a + width < 1:
                cnt = bisect_left(allpos, a + width) - bisect_right(allpos, a)
            else:
                cnt = (L - bisect_right(allpos, a)) + bisect_left(allpos, a + width - 1)
            if cnt:
                continue
            bg = _make_bigon(D, P, Q)
            if bg.n_z == 0 and bg.n_w == 0:
                out.append(bg)
    out.sort(key=lambda bg: (bg.area, bg.class_id, bg.first.param))
    return out


def _point_at_height(A, B, h):
    u = (h - A[1]) / (B[1] - A[1])
    return (A[0] + u * (B[0] - A[0]), h)


def _removal(D, grid, bg):
    """Rerouting data for an innermost empty bigon: (J_F, J_S, F', S') in class-lift coords."""
    N = len(D.beta)
    c = bg.class_id
    P, Q = bg.first, bg.second
    JF, JS = floor(P.param), floor(Q.param)
    if JS - JF > N - 1:
        return None
    side = 1 if bg.upper else -1        # the arc lies on this side of alpha~
    A = lifted_vertex(D, JF, c)
    Dv = lifted_vertex(D, JS + 1, c)
    B = lifted_vertex(D, JF + 1, c)
    C = lifted_vertex(D, JS, c)
    room = min(side * (HALF - A[1]), side * (HALF - Dv[1]))
    dw = (D.w[1] - HALF) - floor(D.w[1] - HALF)
    eps = min(Fraction(1, 4), room / 2, min(dw, 1 - dw) / 2)
    F, S = P.point, Q.point
    h0 = HALF - side * eps
    F0, S0 = _point_at_height(A, B, h0), _point_at_height(C, Dv, h0)
    xs = [F[0], S[0], F0[0], S0[0]]
    ys = sorted((HALF, h0))
    # an edge meeting the strip below the bigon cannot cross alpha between F and S or
    # the edges through F and S, so it has a vertex inside; shrink eps below all of them
    fx0, fx1, fy0, fy1 = float(min(xs)), float(max(xs)), float(ys[0]), float(ys[1])
    seen = set()
    for i, v, p, q in _edges_near(D, grid, min(xs), max(xs), ys[0], ys[1]):
        for V in (p, q):
            if V in seen:
                continue
            seen.add(V)
            if not (fx0 - 1e-9 <= float(V[0]) <= fx1 + 1e-9 and fy0 - 1e-9 <= float(V[1]) <= fy1 + 1e-9):
                continue
            depth = side * (HALF - V[1])
            if not 0 < depth <= eps:
                continue
            l = _point_at_height(A, B, V[1])[0]
            r = _point_at_height(C, Dv, V[1])[0]
            if min(l, r) <= V[0] <= max(l, r):
                eps = min(eps, depth / 2)
    h = HALF - side * eps
    return JF, JS, _point_at_height(A, B, h), _point_at_height(C, Dv, h)


def _splice(D, removals):
    N = len(D.beta)
    off = D.offset
    used = [False] * N
    chosen = []
    for JF, JS, F1, S1, c in removals:
        span = [J % N for J in range(JF, JS + 2)]
        if len(set(span)) < len(span) or any(used[r] for r in span):
            continue
        for r in span:
            used[r] = True
        chosen.append((JF, JS, F1, S1, c))
    if not chosen:
        return D, 0
    s0 = (chosen[0][1] + 1) % N
    inserts = {}
    removed = set()
    for JF, JS, F1, S1, c in chosen:
        k = floor(Fraction(s0 - JF, N))
        if JF + k * N < s0:
            k += 1
        J0 = JF + k * N
        T = (k * off[0], k * off[1] - c)
        inserts[J0] = [_add(F1, T), _add(S1, T)]
        for J in range(J0 + 1, J0 + (JS - JF) + 1):
            removed.add(J)
    path = []
    for J in range(s0, s0 + N):
        if J in removed:
            continue
        path.append(D.vertex(J))
        if J in inserts:
            path.extend(inserts[J])
    return canonical(OneOneDiagram(path, off, D.w)), len(chosen)


def reduce(D, max_batch=None):
    """Remove every empty bigon by isotopies of beta across innermost ones."""
    D = canonical(D)
    while True:
        cands = _innermost_empty(D)
        if not cands:
            return D
        grid = SegmentGrid(D.segments())
        count = len(_crossings(D))
        removals = []
        for bg in cands[: max_batch or len(cands)]:
            r = _removal(D, grid, bg)
            if r is not None:
                removals.append(r + (bg.class_id,))
        if not removals:
            raise InternalInconsistency("empty bigons present but none removable")
        D2, k = _splice(D, removals)
        if len(_crossings(D2)) != count - 2 * k:
            raise InternalInconsistency("bigon removal did not drop the count by two")
        D = D2


# --------------------------------------------------------------------------
# constructions


def geodesic_diagram(p, q, w=None):
    """beta a straight line of class (q, p), i.e. slope p/q; p >= 1."""
    if p == 0:
        raise OneOneError("slope zero is parallel to alpha")
    start = (Fraction(1, 3 * p + 1), Fraction(1, 7))
    if w is None:
        # a point of the strip between consecutive parallel strands
        # strands satisfy -p x + q y = const (mod 1)
        c0 = -p * start[0] + q * start[1]
        target = c0 + Fraction(1, 2)
        # solve -p x + q y = target with y = 1/5 + 0 (generic height off alpha and lattice)
        y = Fraction(1, 5)
        x = (q * y - target) / p
        w = (x, y)
    return validate(OneOneDiagram((start,), (q, p), w))


def unknot():
    return geodesic_diagram(1, 0)


def _trace_standard(p, T0, r, sigma, glue):
    """Trace the standard-form curve.

    Square k is the strip k - 1/2 <= y <= k + 1/2; points on its edges carry lifted indices
    I at x = (I + 1/2)/p + delta.  Cups over w use bottom indices [0, 2r) + p Z, caps under
    z use top indices [T0, T0 + 2r) + p Z, and the other bottom strands (counted from
    index 2r) run to the top strand sigma ranks further along (counted from T0 + 2r).
    The top index J of square k is the bottom index J + glue of square k + 1; the twist is
    straightened by the shear x -> x + y * glue / p.
    """
    if p < 1 or r < 0 or 2 * r >= p:
        raise OneOneError("need p >= 1 and 0 <= 2r < p")
    nv = p - 2 * r
    delta = -Fraction(T0 + r, p)
    eta = Fraction(1, 8 * (p + 1))
    er = Fraction(1, 32 * max(r, 1))
    d = [Fraction(-1, 16) - j * er for j in range(r)]       # cap floors (under z)
    u = [Fraction(-3, 16) + j * er for j in range(r)]       # cup roofs (over w)
    c_lo, c_hi = Fraction(-3, 16) + r * er + er / 2, Fraction(-1, 16) - r * er - er / 2

    def pt(I, k, y):
        return (Fraction(2 * I + 1, 2 * p) + delta + y * Fraction(glue, p), k + y)

    def RB(n):
        return 2 * r + n + (n // nv) * 2 * r

    def RT(n):
        return T0 + 2 * r + n + (n // nv) * 2 * r

    def rank(I, base):
        k, i = divmod(I - base - 2 * r, p)
        if i >= nv:
            raise InternalInconsistency("index inside a rainbow block")
        return i + k * nv

    def block_partner(I, start):
        k, j = divmod(I - start, p)
        if j >= 2 * r:
            return None
        b0 = start + k * p
        return b0 + 2 * r - 1 - j, abs(2 * j - (2 * r - 1)) // 2

    I0 = RB(0)
    path = [pt(I0, 0, -HALF + eta)]
    state = ("B", I0, 0)
    visited = 0
    while True:
        side, I, k = state
        if side == "B":
            bp = block_partner(I, 0)
            if bp is not None:
                J, lev = bp
                path += [pt(I, k, u[lev]), pt(J, k, u[lev]), pt(J, k, -HALF + eta),
                         pt(J, k, -HALF - eta)]
                state = ("T", J - glue, k - 1)
                crossed = J
            else:
                J = RT(rank(I, 0) + sigma)
                path += [pt(I, k, c_lo), pt(J, k, c_hi), pt(J, k, HALF - eta), pt(J, k, HALF + eta)]
                state = ("B", J + glue, k + 1)
                crossed = J + glue
        else:
            bp = block_partner(I, T0)
            if bp is not None:
                J, lev = bp
                path += [pt(I, k, d[lev]), pt(J, k, d[lev]), pt(J, k, HALF - eta), pt(J, k, HALF + eta)]
                state = ("B", J + glue, k + 1)
                crossed = J + glue
            else:
                J = RB(rank(I, T0) - sigma)
                path += [pt(I, k, c_hi), pt(J, k, c_lo), pt(J, k, -HALF + eta),
                         pt(J, k, -HALF - eta)]
                state = ("T", J - glue, k - 1)
                crossed = J
        visited += 1
        if crossed % p == I0 % p:
            break
        if visited > p:
            raise OneOneError("standard form parameters do not close up")
    if visited != p:
        raise OneOneError(f"parameters give a multi-component curve ({visited} of {p} points)")
    side, I, k = state
    if side != "B":
        raise OneOneError("curve returned with reversed orientation")
    last = path.pop()
    offset = (last[0] - path[0][0], last[1] - path[0][1])
    if offset[0].denominator != 1 or offset[1].denominator != 1:
        raise InternalInconsistency("standard form closing vertex mismatch")
    w = pt(r - 1 if r else 0, 0, Fraction(-1, 4))
    w = (w[0] + (Fraction(1, 2 * p) if r else -Fraction(1, 2 * p)), w[1])
    return validate(OneOneDiagram(path, (int(offset[0]), int(offset[1])), w))


def from_standard_form(p, q, r, s):
    """Standard form diagram K(p, q, r, s).

    This docstring is the one place the convention is fixed.  The square carries p
    points of alpha on its bottom edge and the same p points on its top edge, numbered
    0..p-1 from the left.  The r rainbows over w join the bottom points 0..2r-1; the r
    rainbows under z join the top points s..s+2r-1 (mod p).  The i-th free bottom point,
    counted from the left, runs to the (i + q)-th free top point (indices mod p - 2r).
    """
    if p < 1 or r < 0 or 2 * r >= p:
        raise OneOneError("need p >= 1 and 0 <= 2r < p")
    if not 0 <= s < p:
        raise OneOneError("need 0 <= s < p")
    shift = s if s + 2 * r < p else 0
    return _trace_standard(p, s, r, q - shift, 0)


def inflate(D, rng=None, count=1):
    """Add ``count`` empty-bigon zigzags at random crossings (test helper)."""
    rng = rng or random.Random(0)
    for _ in range(count):
        pts = _crossings(D)
        pt = rng.choice(pts)
        i = pt.edge
        p, q = D.beta[i], D.vertex(i + 1)
        X = (p[0] + (pt.beta_parameter - i) * (q[0] - p[0]), p[1] + (pt.beta_parameter - i) * (q[1] - p[1]))
        dvec = (q[0] - p[0], q[1] - p[1])
        direction = rng.choice((1, -1))
        scale = Fraction(1, rng.choice((16, 32, 64, 128)))
        for _ in range(40):
            et = scale * min(pt.beta_parameter - i, 1 - (pt.beta_parameter - i))
            rho = direction * scale * min(abs(dvec[1]) * et, Fraction(1, 8))
            X1 = (X[0] - et * dvec[0], X[1] - et * dvec[1])
            Y1 = (X[0] + et * dvec[0] + rho, X[1] + et * dvec[1])
            Y2 = (X[0] - et * dvec[0] + 2 * rho, X[1] - et * dvec[1])
            Y3 = (X[0] + et * dvec[0] + 3 * rho, X[1] + et * dvec[1])
            beta = list(D.beta[: i + 1]) + [X1, Y1, Y2, Y3] + list(D.beta[i + 1:])
            cand = OneOneDiagram(beta, D.offset, D.w)
            try:
                cand = validate(cand)
            except OneOneError:
                scale /= 2
                continue
            if len(_crossings(cand)) == len(pts) + 2:
                D = cand
                break
            scale /= 2
        else:
            raise InternalInconsistency("could not inflate diagram")
    return D
