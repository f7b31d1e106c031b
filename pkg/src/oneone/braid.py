"""1-bridge braids K(omega, b, m) and their geodesic lattice data.

The bridge arc gamma is straightened to a segment from (0, 0) to (t, omega).  Slopes of
lattice segments through the origin that gamma may sweep across without meeting Z^2
form the slope interval I = [s-, s+].
"""
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd

from . import diagram as dg
from .errors import (InternalInconsistency, NotAKnot, NotStrict, OneOneError, OutOfRange,
                     SlopeZero)
from .lattice import (INF, CyclicInterval, ProjectiveSlope, farey_gap, interval_contains)


@dataclass(frozen=True)
class BridgeBraid:
    omega: int
    b: int
    m: int

    def word(self):
        return list(range(self.b, 0, -1)) + list(range(self.omega - 1, 0, -1)) * self.m

    def __str__(self):
        return f"K({self.omega},{self.b},{self.m})"


@dataclass(frozen=True)
class GeodesicData:
    t: Fraction
    slope: Fraction
    gap: tuple


@dataclass(frozen=True)
class Strict:
    def __str__(self):
        return "Strict"


@dataclass(frozen=True)
class TorusKnot:
    q: int
    omega: int

    def __str__(self):
        return f"TorusKnot({self.q},{self.omega})"


@dataclass(frozen=True)
class ExceptionalCable:
    companion_q: int
    companion_omega: int
    d: int
    sign: int

    def __str__(self):
        s = "+" if self.sign > 0 else "-"
        return f"ExceptionalCable({self.companion_q},{self.companion_omega},{self.d},{s})"


@dataclass(frozen=True)
class InclusionVerdict:
    positive: bool
    negative: bool
    simple: bool


def permutation_cycles(omega, word):
    perm = list(range(omega))
    for s in word:
        i = s - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    seen, n = set(), 0
    for k in range(omega):
        if k in seen:
            continue
        n += 1
        while k not in seen:
            seen.add(k)
            k = perm[k]
    return n


def braid_validate(omega, b, m):
    if omega < 2 or not 1 <= b <= omega - 1:
        raise OutOfRange(f"need omega >= 2 and 1 <= b <= omega - 1, got ({omega}, {b}, {m})")
    K = BridgeBraid(omega, b, m % omega)
    if permutation_cycles(omega, K.word()) != 1:
        raise NotAKnot(f"closure of {K} has more than one component")
    return K


# --------------------------------------------------------------------------
# geodesic data


def _bhat(omega, t):
    """Number of strands the arc ending at t passes in the (m, m+1) sheet."""
    r = t / omega
    ft = t - floor(t)
    return sum(1 for j in range(1, omega) if 0 < (j * r) % 1 < ft)


def gaps(omega, m):
    """Open intervals of t in (m, m+1) on which the segment (0,0)-(t,omega) avoids Z^2."""
    ev = sorted({Fraction(k * omega, j) for j in range(1, omega) for k in range(0, m + 2)
                 if m < Fraction(k * omega, j) < m + 1})
    pts = [Fraction(m)] + ev + [Fraction(m + 1)]
    return list(zip(pts, pts[1:]))


def geodesic(K):
    """Endpoint abscissa t and slope omega/t of the straightened bridge arc.

    The gap of t is the one whose sheet count equals b; t = m + b/omega when that value
    lies inside the gap, otherwise the gap midpoint.
    """
    for lo, hi in gaps(K.omega, K.m):
        mid = (lo + hi) / 2
        if _bhat(K.omega, mid) == K.b:
            t = K.m + Fraction(K.b, K.omega)
            if not lo < t < hi:
                t = mid
            return GeodesicData(t, K.omega / t, (lo, hi))
    raise InternalInconsistency(f"no geodesic gap for {K}")


def _lattice_scan(omega, s):
    """Nearest slopes y/x (1 <= y <= omega, x >= 0) below and above s by direct scan."""
    below, above = None, None
    xmax = ceil(omega / s) + 1
    for y in range(1, omega + 1):
        for x in range(0, xmax + 1):
            v = INF.value() if x == 0 else Fraction(y, x)
            if x == 0:
                if above is None:
                    above = INF
                continue
            if v <= s and (below is None or v > below):
                below = v
            if v >= s and (above is None or above is INF or v < above.value()):
                above = ProjectiveSlope.of(v)
    return below, above


def slope_interval(K):
    g = geodesic(K)
    lo = Fraction(K.omega, K.m + 1)
    hi = INF if K.m == 0 else Fraction(K.omega, K.m)
    sm, sp = farey_gap(lo, hi, g.slope, K.m)
    I = CyclicInterval(ProjectiveSlope.of(sm), ProjectiveSlope.of(sp) if sp is not INF else INF)
    b2, a2 = _lattice_scan(K.omega, g.slope)
    if ProjectiveSlope.of(b2) != I.start or a2 != I.end:
        raise InternalInconsistency(f"Farey gap {I} disagrees with lattice scan for {K}")
    return I


def classify_type(K):
    I = slope_interval(K)
    hits = []
    for s, sign in ((I.start, -1), (I.end, 1)):
        if s.is_inf:
            hits.append(((0, K.omega), sign))
            continue
        x = K.omega * Fraction(s.run, s.rise)
        if x.denominator == 1:
            hits.append(((int(x), K.omega), sign))
    for (q, w), sign in hits:
        if gcd(q, w) == 1:
            return TorusKnot(q, w)
    if hits:
        (q, w), sign = hits[0]
        d = gcd(q, w)
        return ExceptionalCable(q // d, w // d, d, sign)
    return Strict()


def is_strict(K):
    return isinstance(classify_type(K), Strict)


def _require_strict(K):
    if not is_strict(K):
        raise NotStrict(f"{K} is {classify_type(K)}")


def classify_inclusion(K, filling):
    _require_strict(K)
    f = ProjectiveSlope.of(filling)
    I = slope_interval(K)
    zero = ProjectiveSlope(0, 1)
    pos = interval_contains(CyclicInterval(zero, f), I.start)
    neg = interval_contains(CyclicInterval(f, zero), I.end)
    simple = interval_contains(I, f)
    if simple and not (pos and neg):
        raise InternalInconsistency("simple inclusion that is not both positive and negative")
    return InclusionVerdict(pos, neg, simple)


# --------------------------------------------------------------------------
# fillings, mirror, search


def mirror_slope(s):
    s = ProjectiveSlope.of(s)
    return ProjectiveSlope(s.rise, s.rise - s.run)


def mirror(K):
    """Image of the geodesic under (x, y) -> (y - x, y)."""
    g = geodesic(K)
    t2 = K.omega - g.t
    m2 = K.omega - K.m - 1
    b2 = _bhat(K.omega, t2)
    if b2 == 0:
        # (s_{w-1}...s_1)^{m'} is K(w, w-1, m'-1): a torus knot whose arc crosses the sheet edge
        return braid_validate(K.omega, K.omega - 1, m2 - 1)
    K2 = braid_validate(K.omega, b2, m2)
    if geodesic(K2).gap != tuple(sorted(K.omega - x for x in g.gap)):
        raise InternalInconsistency("mirror geodesic left its gap")
    return K2


def solid_torus_fillings(K):
    _require_strict(K)
    I = slope_interval(K)
    lo, hi = I.start.value(), I.end.value()
    w = K.omega
    out = []
    for p in range(1, w + 2):
        for q in range(ceil(p / hi), floor(p / lo) + 1):
            if q <= 0 or gcd(p, q) != 1:
                continue
            a = w % p in (1 % p, (-1) % p)
            b = (w * q) % p in (1 % p, (-1) % p)
            if a or b:
                out.append(ProjectiveSlope(p, q))
    return sorted(out, key=lambda s: s.value())


def congruence_cases(K, s):
    s = ProjectiveSlope.of(s)
    p, q, w = s.rise, s.run, K.omega
    return (w % p in (1 % p, (-1) % p), (w * q) % p in (1 % p, (-1) % p))


def braid_equivalent(K1, K2):
    _require_strict(K1)
    _require_strict(K2)
    return K1.omega == K2.omega and slope_interval(K1) == slope_interval(K2)


def all_braids(omega_max, strict_only=False):
    """Valid braids with omega <= omega_max, plus the count of rejected link closures."""
    out, rejected = [], 0
    for w in range(2, omega_max + 1):
        for m in range(w):
            for b in range(1, w):
                try:
                    K = braid_validate(w, b, m)
                except NotAKnot:
                    rejected += 1
                    continue
                if strict_only and not is_strict(K):
                    continue
                out.append(K)
    return out, rejected


def _fillings_row(K):
    return K, solid_torus_fillings(K)


def _threads():
    try:
        return max(1, int(os.environ.get("ONEONE_THREADS", "1")))
    except ValueError:
        return 1


def berge_search(omega_max):
    """Strict braids with at least three (and exactly two) solid torus fillings."""
    if omega_max < 2:
        raise OutOfRange("omega_max must be at least 2")
    braids, _ = all_braids(omega_max, strict_only=True)
    n = _threads()
    if n > 1 and len(braids) > 50:
        with ProcessPoolExecutor(n) as ex:
            rows = list(ex.map(_fillings_row, braids, chunksize=16))
    else:
        rows = [_fillings_row(K) for K in braids]
    three = [(K, f) for K, f in rows if len(f) >= 3]
    two = [(K, f) for K, f in rows if len(f) == 2]
    return three, two


# --------------------------------------------------------------------------
# inclusion diagrams


def _gamma_frame(t, omega):
    d = (t, Fraction(omega))
    n = (-Fraction(omega), t)
    n2 = t * t + omega * omega
    return d, n, n2


def _coords(P, v, d, n, n2):
    x, y = P[0] - v[0], P[1] - v[1]
    return (x * d[0] + y * d[1]) / n2, (x * n[0] + y * n[1]) / n2


def _point(v, sigma, tau, d, n):
    return (v[0] + sigma * d[0] + tau * n[0], v[1] + sigma * d[1] + tau * n[1])


def _frac(x):
    return x - floor(x)


def _choose_c0(p, q, t, omega):
    """Level c of the beta_0 lines -p x + q y = c (mod 1) away from z, w and gamma ∩ alpha."""
    bad = {Fraction(0), _frac(-p * t)}
    for j in range(omega):
        y = Fraction(2 * j + 1, 2)
        bad.add(_frac(-p * t * y / omega + q * y))
    bad = sorted(bad)
    gaps_ = [(bad[i + 1] - bad[i], bad[i]) for i in range(len(bad) - 1)]
    gaps_.append((1 + bad[0] - bad[-1], bad[-1]))
    width, start = max(gaps_)
    return _frac(start + width / 2), width


def _period_crossings(P_base, u, t, omega):
    """(lambda, v, sigma) for every crossing of the segment P_base + [0,1) u with gamma + Z^2."""
    d, n, n2 = _gamma_frame(t, omega)
    D = u[0] * omega - u[1] * t          # det(u, d)
    out = []
    if D == 0:
        return out, D
    xs = [P_base[0], P_base[0] + u[0]]
    ys = [P_base[1], P_base[1] + u[1]]
    for vx in range(floor(min(xs) - max(t, 0)) - 1, ceil(max(xs) - min(t, 0)) + 2):
        for vy in range(floor(min(ys)) - omega - 1, ceil(max(ys)) + 2):
            # P_base + lam u = v + sig d
            rx, ry = vx - P_base[0], vy - P_base[1]
            lam = (rx * d[1] - ry * d[0]) / (u[0] * d[1] - u[1] * d[0])
            sig = (u[1] * rx - u[0] * ry) / (u[0] * d[1] - u[1] * d[0])
            if 0 <= lam < 1 and 0 < sig < 1:
                out.append((lam, (vx, vy), sig))
    out.sort()
    return out, D


def _nearby_obstacles(t, omega, reach):
    """(sigma, tau) of z and w lifts and of other gamma lifts near the segment."""
    d, n, n2 = _gamma_frame(t, omega)
    pts, lifts = [], []
    R = int(ceil(reach)) + 1
    for vx in range(floor(-R - abs(t)) - 1, ceil(R + abs(t)) + 2):
        for vy in range(-R - omega - 1, R + omega + 2):
            v = (vx, vy)
            for base in ((0, 0), (t, omega)):
                P = (base[0] + vx, base[1] + vy)
                s, tau = _coords(P, (0, 0), d, n, n2)
                if (s, tau) in ((0, 0), (1, 0)):
                    continue
                pts.append((s, tau))
            if v != (0, 0):
                s, tau = _coords(v, (0, 0), d, n, n2)
                lifts.append((s, tau))
    return pts, lifts


def _finger_path(K, g, p, q, shrink, jitter):
    t, omega = g.t, K.omega
    d, n, n2 = _gamma_frame(t, omega)
    u = (q, p)
    c0, cgap = _choose_c0(p, q, t, omega)
    y0 = Fraction(1, 7)
    P_base = ((q * y0 - c0) / p, y0)
    cr, D = _period_crossings(P_base, u, t, omega)
    if not cr:
        return dg.OneOneDiagram((P_base,), (q, p), (t, 0)), cr
    lams = [c[0] for c in cr]
    gl = [(lams[i + 1] - lams[i], lams[i]) for i in range(len(lams) - 1)]
    gl.append((1 + lams[0] - lams[-1], lams[-1]))
    gmin = min(x[0] for x in gl)
    width, start = max(gl)
    lam0 = start + width * (Fraction(1, 2) + jitter)
    P0 = (P_base[0] + lam0 * u[0], P_base[1] + lam0 * u[1])
    cr, D = _period_crossings(P0, u, t, omega)
    sigmas = sorted({c[2] for c in cr})
    Kc = len(sigmas)
    rank = {s: i + 1 for i, s in enumerate(sigmas)}
    absD = abs(D)
    un = (u[0] * n[0] + u[1] * n[1]) / n2        # d tau / d lambda
    ud = (u[0] * d[0] + u[1] * d[1]) / n2        # d sigma / d lambda
    # bounds on the half-width H and the tip extension E
    lam_gap = gmin / 2
    H = lam_gap * abs(un) / 2
    s_room = min(sigmas[0], 1 - sigmas[-1]) / 2
    if ud != 0:
        H = min(H, s_room * abs(un) / abs(ud))
    E = Fraction(1, 4)
    # next beta_0 crossing of the gamma line beyond w
    step = 1 / absD if absD else Fraction(1)
    beyond = [s + k * step for s in sigmas for k in range(1, 2 * Kc + 3) if s + k * step > 1]
    if beyond:
        E = min(E, (min(beyond) - 1) / 2)
    pts, lifts = _nearby_obstacles(t, omega, 2)
    for s, tau in pts:
        if -1 <= s <= 1 + E:
            if tau != 0:
                H = min(H, abs(tau) / 2)
            elif s > 1:
                E = min(E, (s - 1) / 2)
    for s, tau in lifts:
        if s + 1 >= -1 and s <= 2:
            if tau != 0:
                H = min(H, abs(tau) / 3)
            elif s > 1:
                E = min(E, (s - 1) / 2)
    H, E = H * shrink, E * shrink
    kappa = 1 if un > 0 else -1
    path = [P0]
    for lam, v, sig in cr:
        k = rank[sig]
        h = H * k / Kc
        e = E * k / Kc
        dl = h / abs(un)
        A = (P0[0] + (lam - dl) * u[0], P0[1] + (lam - dl) * u[1])
        B = (P0[0] + (lam + dl) * u[0], P0[1] + (lam + dl) * u[1])
        sA, tA = _coords(A, v, d, n, n2)
        sB, tB = _coords(B, v, d, n, n2)
        if tA != -kappa * h or tB != kappa * h:
            raise InternalInconsistency("finger wall offsets")
        A1 = _point(v, 1 + e, tA, d, n)
        B1 = _point(v, 1 + e, tB, d, n)
        path += [A, A1, B1, B]
    w = (_frac(t), Fraction(0))
    return dg.OneOneDiagram(tuple(path), (q, p), w), cr


def finger_diagram(K, filling, shrink=Fraction(1)):
    """beta_1: the filling geodesic pushed off gamma by fingers around w (unreduced)."""
    f = ProjectiveSlope.of(filling)
    if f.rise == 0:
        raise SlopeZero("filling slope 0/1 is excluded")
    p, q = f.rise, f.run
    g = geodesic(K)
    last = None
    for attempt in range(12):
        jitter = Fraction(attempt % 3, 17)
        D, cr = _finger_path(K, g, p, q, shrink / (2 ** (attempt // 3)), jitter)
        try:
            return dg.validate(D)
        except OneOneError as e:
            last = e
    raise InternalInconsistency(f"finger move failed for {K}, {f}: {last}")


def inclusion_diagram(K, filling):
    return dg.reduce(finger_diagram(K, filling))


def inclusion_record(K, filling):
    """Build the inclusion diagram and compare it with the interval criteria (for sweeps)."""
    from . import floer
    f = ProjectiveSlope.of(filling)
    D = inclusion_diagram(K, f)
    verdict = floer.lspace_verdict(D)
    same_sign = len({x.sign for x in dg.intersections(D)}) == 1
    rec = {"omega": K.omega, "b": K.b, "m": K.m, "filling": str(f), "verdict": verdict,
           "coherence": dg.coherence(D), "same_sign": same_sign, "strict": is_strict(K),
           "intersections": len(dg.intersections(D)), "agree": True}
    if same_sign != (verdict == floer.BOTH):
        rec["agree"] = False
    if rec["strict"]:
        v = classify_inclusion(K, f)
        rec.update(positive=v.positive, negative=v.negative, simple=v.simple)
        want = (verdict in (floer.POSITIVE_LSPACE, floer.BOTH),
                verdict in (floer.NEGATIVE_LSPACE, floer.BOTH), verdict == floer.BOTH)
        if (v.positive, v.negative, v.simple) != want or v.simple != same_sign:
            rec["agree"] = False
    return rec
