"""Exact slope arithmetic on P^1(Q), Farey gaps, lattice predicates and winding numbers.

Everything here works over ``fractions.Fraction`` and Python integers; nothing
touches floating point.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd


def frac(x):
    return Fraction(x)


def fmt_rational(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s):
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    s = str(s).strip()
    if "/" in s:
        n, d = s.split("/")
        d = int(d)
        if d == 0:
            raise ValueError(f"zero denominator in {s!r}")
        return Fraction(int(n), d)
    return Fraction(int(s))


@dataclass(frozen=True, order=False)
class ProjectiveSlope:
    """A point of P^1(Q) stored as rise/run with run >= 0; 1/0 is infinity."""
    rise: int
    run: int

    def __post_init__(self):
        r, n = self.rise, self.run
        if (r, n) == (0, 0):
            raise ValueError("0/0 is not a slope")
        if n < 0:
            r, n = -r, -n
        g = gcd(r, n)
        r, n = r // g, n // g
        if n == 0:
            r = 1
        object.__setattr__(self, "rise", r)
        object.__setattr__(self, "run", n)

    @classmethod
    def of(cls, x):
        if isinstance(x, ProjectiveSlope):
            return x
        if isinstance(x, str):
            return cls.parse(x)
        x = Fraction(x)
        return cls(x.numerator, x.denominator)

    @classmethod
    def parse(cls, s):
        s = s.strip()
        if s.lower() in ("inf", "infinity", "oo", "∞"):
            return INF
        if "/" in s:
            a, b = s.split("/")
            return cls(int(a), int(b))
        return cls(int(s), 1)

    @property
    def is_inf(self):
        return self.run == 0

    def value(self):
        """Fraction for finite slopes, float('inf') for 1/0 (comparable with Fractions)."""
        return float("inf") if self.is_inf else Fraction(self.rise, self.run)

    def __str__(self):
        return f"{self.rise}/{self.run}"

    def __repr__(self):
        return f"Slope({self})"


INF = ProjectiveSlope(1, 0)


def mediant(a, b):
    a, b = ProjectiveSlope.of(a), ProjectiveSlope.of(b)
    return ProjectiveSlope(a.rise + b.rise, a.run + b.run)


@dataclass(frozen=True)
class CyclicInterval:
    """Closed counterclockwise arc of the slope circle from start to end."""
    start: ProjectiveSlope
    end: ProjectiveSlope

    def reverse(self):
        return CyclicInterval(self.end, self.start)

    def __str__(self):
        return f"[{self.start}, {self.end}]"


@dataclass(frozen=True)
class FullCircleMinus:
    point: ProjectiveSlope


def interval_contains(interval, s):
    s = ProjectiveSlope.of(s)
    if isinstance(interval, FullCircleMinus):
        return s != interval.point
    lo, hi, x = interval.start.value(), interval.end.value(), s.value()
    if lo <= hi:
        return lo <= x <= hi
    # arc wraps through infinity
    return x >= lo or x <= hi


def farey_gap(lo, hi, s, max_den):
    """Consecutive members (s-, s+) of {lo, hi} + {fractions in (lo, hi) with denominator <= max_den}
    bracketing s.  ``hi`` may be ``INF`` only when there are no interior members (max_den == 0)."""
    lo = Fraction(lo)
    hi_inf = isinstance(hi, ProjectiveSlope) and hi.is_inf
    if not hi_inf:
        hi = Fraction(hi.value() if isinstance(hi, ProjectiveSlope) else hi)
        if lo >= hi:
            raise ValueError("farey_gap needs lo < hi")
    s = Fraction(s)
    if s < lo or (not hi_inf and s > hi):
        raise ValueError("s outside [lo, hi]")
    if hi_inf and max_den > 0:
        raise ValueError("unbounded gap with interior members")
    below, above = lo, (INF if hi_inf else hi)
    for d in range(1, max_den + 1):
        n0 = floor(lo * d) + 1
        n1 = ceil(hi * d) - 1
        for n in range(n0, n1 + 1):
            f = Fraction(n, d)
            if f.denominator != d:
                continue
            if f <= s and f > below:
                below = f
            if f >= s and (above is INF or f < above):
                above = f
    return below, above


def det(v, w):
    return v[0] * w[1] - v[1] * w[0]


def triangle_empty(v, w):
    """Triangle (0, v, w) holds no lattice point besides its vertices iff |det| = 1."""
    d = det(v, w)
    if d == 0:
        raise ValueError("degenerate triangle")
    return abs(d) == 1


def lattice_points_in_triangle(a, b, c, strict=False):
    """Brute force scan; with strict=True only interior points are returned."""
    xs = [p[0] for p in (a, b, c)]
    ys = [p[1] for p in (a, b, c)]
    out = []
    o = _orient(a, b, c)
    if o == 0:
        raise ValueError("degenerate triangle")
    for x in range(floor(min(xs)), ceil(max(xs)) + 1):
        for y in range(floor(min(ys)), ceil(max(ys)) + 1):
            p = (x, y)
            s1, s2, s3 = _orient(a, b, p) * o, _orient(b, c, p) * o, _orient(c, a, p) * o
            if strict:
                ok = s1 > 0 and s2 > 0 and s3 > 0
            else:
                ok = s1 >= 0 and s2 >= 0 and s3 >= 0
            if ok:
                out.append(p)
    return out


def _orient(a, b, c):
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def _on_segment(p, a, b):
    if (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def winding_number(loop, p):
    """Winding number of the closed polygon ``loop`` around ``p`` (crossings of the ray to +x)."""
    n = len(loop)
    px, py = p
    w = 0
    for i in range(n):
        a, b = loop[i], loop[(i + 1) % n]
        if _on_segment(p, a, b):
            raise ValueError("point lies on the loop")
        if a[1] <= py < b[1]:
            if _orient(a, b, p) > 0:
                w += 1
        elif b[1] <= py < a[1]:
            if _orient(a, b, p) < 0:
                w -= 1
    return w


def winding_sum(loop, c=(0, 0)):
    """Sum of winding numbers of ``loop`` around every point of c + Z^2.

    On each horizontal line y = j + c_y the crossings (x_i, s_i) have total sign zero,
    so sum_k wind(c_x + k) = sum_i s_i * ceil(x_i - c_x).
    """
    cx, cy = Fraction(c[0]), Fraction(c[1])
    n = len(loop)
    ys = [q[1] for q in loop]
    total = 0
    for j in range(floor(min(ys) - cy), ceil(max(ys) - cy) + 1):
        Y = cy + j
        acc = 0
        for i in range(n):
            a, b = loop[i], loop[(i + 1) % n]
            if a[1] <= Y < b[1]:
                s = 1
            elif b[1] <= Y < a[1]:
                s = -1
            else:
                continue
            X = a[0] + (Y - a[1]) * (b[0] - a[0]) / (b[1] - a[1])
            r = X - cx
            if r.denominator == 1:
                raise ValueError("lattice point on the loop")
            acc += s * ceil(r)
        total += acc
    return total
