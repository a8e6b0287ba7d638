"""Slow independent oracles used only by the tests.

Each oracle recomputes a library result by a structurally different
route: exhaustive search instead of closed form, geometry instead of
continued fractions, parity ray-casting instead of determinant signs.
None of them calls the code path it is checking.
"""

from __future__ import annotations

from fractions import Fraction

from fanopoly.kernel import UnimodularMap, cone_order
from fanopoly.polygon import FanoPolygon


def solve_pair_map(v0, v1, w0, w1):
    """The unique rational linear map with v0 -> w0, v1 -> w1, as a
    UnimodularMap when it is integral of determinant +-1, else None."""
    det = cone_order(v0, v1)
    if det == 0:
        return None
    m11 = Fraction(w0[0] * v1[1] - w1[0] * v0[1], det)
    m12 = Fraction(-w0[0] * v1[0] + w1[0] * v0[0], det)
    m21 = Fraction(w0[1] * v1[1] - w1[1] * v0[1], det)
    m22 = Fraction(-w0[1] * v1[0] + w1[1] * v0[0], det)
    if any(e.denominator != 1 for e in (m11, m12, m21, m22)):
        return None
    a, b, c, d = int(m11), int(m12), int(m21), int(m22)
    if abs(a * d - b * c) != 1:
        return None
    return UnimodularMap(a, b, c, d)


def equivalent_by_edge_search(P: FanoPolygon, Q: FanoPolygon):
    """Equivalence witness found by trying every directed-edge image;
    independent of canonical forms."""
    if P.vertex_count != Q.vertex_count:
        return None
    vs, ws = P.vertices, Q.vertices
    n = len(ws)
    wset = set(ws)
    for j in range(n):
        for w0, w1 in ((ws[j], ws[(j + 1) % n]), (ws[j], ws[(j - 1) % n])):
            m = solve_pair_map(vs[0], vs[1], w0, w1)
            if m is not None and all(m.apply(p) in wset for p in vs):
                return m
    return None


def slow_class_representatives(polygons):
    """Pairwise-equivalence dedup: one representative per class."""
    reps: list[FanoPolygon] = []
    for P in polygons:
        if not any(equivalent_by_edge_search(P, R) is not None for R in reps):
            reps.append(P)
    return reps


def normal_forms_by_search(u, v):
    """All (k, M) with M unimodular, M(u) == (0,1) and M(v) == (n,-k) for
    some 0 < k <= n; found by direct linear solving for every k."""
    n = abs(cone_order(u, v))
    out = []
    for k in range(1, n + 1):
        m = solve_pair_map(u, v, (0, 1), (n, -k))
        if m is not None:
            out.append((k, m))
    return out


def _lattice_points_on_segment(p, q):
    """Lattice points strictly between p and q (which must be lattice)."""
    import math

    dx, dy = q[0] - p[0], q[1] - p[1]
    g = math.gcd(dx, dy)
    return [(p[0] + j * dx // g, p[1] + j * dy // g) for j in range(1, g)]


def resolution_chain_by_hull(n: int, k: int):
    """Self-intersections of the minimal-resolution chain of the cone
    ((0,1), (n,-k)), read off the boundary lattice points of the hull of
    the cone's nonzero lattice points. Purely geometric."""
    assert n >= 2 and 0 < k < n
    pts = []
    for x in range(0, n + 1):
        for y in range(-k, 2):
            if (x, y) == (0, 0):
                continue
            # inside the cone: x >= 0 and on the origin side of (n,-k)
            if n * y + k * x < 0:
                continue
            # under the segment from (0,1) to (n,-k)
            if n * y + (k + 1) * x > n:
                continue
            pts.append((x, y))
    hull = _strict_hull(pts)
    if len(hull) == 2:
        path = hull if hull[0] == (0, 1) else [hull[1], hull[0]]
    else:
        i0 = hull.index((0, 1))
        path = []
        i = i0
        while True:
            path.append(hull[i])
            if hull[i] == (n, -k):
                break
            i = (i + 1) % len(hull)
    full = [path[0]]
    for a, b in zip(path, path[1:]):
        full.extend(_lattice_points_on_segment(a, b))
        full.append(b)
    chain = full[1:-1]
    out = []
    for j in range(len(chain)):
        prev = full[j]
        cur = chain[j]
        nxt = full[j + 2]
        sx, sy = prev[0] + nxt[0], prev[1] + nxt[1]
        b = sx // cur[0] if cur[0] != 0 else sy // cur[1]
        assert (b * cur[0], b * cur[1]) == (sx, sy)
        out.append(-b)
    return out


def _strict_hull(points):
    pts = sorted(points)
    if len(pts) <= 2:
        return pts

    def cross3(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross3(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross3(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


# direction chosen so no small lattice point lies on the test ray
_RAY_DIR = (Fraction(1), Fraction(1, 7919))


def _origin_on_closed_segment(p, q) -> bool:
    if cone_order(p, q) != 0:
        return False
    # collinear with the origin: inside iff the endpoints straddle it
    return p[0] * q[0] + p[1] * q[1] <= 0


def origin_strictly_inside_by_parity(cycle) -> bool:
    """Ray-casting parity test for the origin against a polygon cycle.

    Completely independent of the consecutive-determinant validation: it
    never looks at the sign pattern of edge orders.
    """
    for i in range(len(cycle)):
        if _origin_on_closed_segment(cycle[i], cycle[(i + 1) % len(cycle)]):
            return False
    dx, dy = _RAY_DIR
    crossings = 0
    for i in range(len(cycle)):
        px, py = cycle[i]
        qx, qy = cycle[(i + 1) % len(cycle)]
        # solve origin + t*(dx,dy) == p + s*(q - p), 0 < s < 1 allow s in [0,1)
        ex, ey = qx - px, qy - py
        den = dx * ey - dy * ex
        if den == 0:
            continue
        t = Fraction(px * ey - py * ex, den)
        s = Fraction(dx * py - dy * px, -den)
        if t > 0 and 0 <= s < 1:
            crossings += 1
    return crossings % 2 == 1
