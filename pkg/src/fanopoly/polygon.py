"""Fano polygons and their rational duals, all in exact arithmetic.

A Fano polygon is a convex lattice polygon whose vertices are primitive
and whose strict interior contains the origin. Vertices are stored
counterclockwise starting at the lexicographically least vertex, so two
equal polygons are equal as tuples.

The dual polygon lives over the rationals; its barycenter vanishing at
the origin is the Kahler-Einstein criterion for the toric surface the
polygon spans.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from .errors import FanoError, InternalCheckError
from .kernel import (
    FLIP_Y,
    LatticePoint,
    UnimodularMap,
    cone_order,
    is_primitive,
    normalize_cone_basis,
)

RationalPoint = Tuple[Fraction, Fraction]


@dataclass(frozen=True, slots=True)
class FanoPolygon:
    """Validated Fano polygon; construct through :func:`make_fano_polygon`."""

    vertices: tuple[LatticePoint, ...]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def edges(self):
        """Directed boundary edges (v_i, v_{i+1}), cyclically."""
        vs = self.vertices
        n = len(vs)
        return [(vs[i], vs[(i + 1) % n]) for i in range(n)]

    def edge_orders(self) -> list[int]:
        return [cone_order(u, v) for u, v in self.edges()]

    def to_json_dict(self) -> dict:
        return {"vertices": [[x, y] for x, y in self.vertices]}


@dataclass(frozen=True, slots=True)
class RationalPolygon:
    """Convex CCW polygon with exact rational vertices, origin interior."""

    vertices: tuple[RationalPoint, ...]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def edges(self):
        vs = self.vertices
        n = len(vs)
        return [(vs[i], vs[(i + 1) % n]) for i in range(n)]

    def edge_orders(self) -> list[Fraction]:
        return [cone_order(u, v) for u, v in self.edges()]

    def is_lattice(self) -> bool:
        return all(x.denominator == 1 and y.denominator == 1 for x, y in self.vertices)

    def scaled(self, t: int) -> "RationalPolygon":
        return RationalPolygon(tuple((t * x, t * y) for x, y in self.vertices))


def _rotate_to_lex_least(points: Sequence) -> tuple:
    i = min(range(len(points)), key=lambda j: points[j])
    return tuple(points[i:]) + tuple(points[:i])


def _cross3(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _strict_hull(points: list[LatticePoint]) -> list[LatticePoint]:
    """Convex hull, CCW, collinear boundary points dropped."""
    pts = sorted(points)
    if len(pts) <= 2:
        return pts
    lower: list[LatticePoint] = []
    for p in pts:
        while len(lower) >= 2 and _cross3(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[LatticePoint] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross3(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def make_fano_polygon(points: Iterable[LatticePoint]) -> FanoPolygon:
    """Validate raw points into a Fano polygon.

    The input may be in any order; points interior to the hull or interior
    to an edge are discarded. Every input point must be primitive and the
    origin must be strictly inside the hull of the rest. Distinct error
    codes: ``duplicate_point``, ``not_primitive``, ``too_few_vertices``,
    ``origin_not_interior``.
    """
    pts = [(int(x), int(y)) for x, y in points]
    seen = set()
    for p in pts:
        if p in seen:
            raise FanoError("duplicate_point", f"point {p} given twice")
        seen.add(p)
    for p in pts:
        if not is_primitive(p):
            raise FanoError("not_primitive", f"vertex {p} is not primitive")
    hull = _strict_hull(pts)
    if len(hull) < 3:
        raise FanoError("too_few_vertices", f"only {len(hull)} hull vertices")
    for i, u in enumerate(hull):
        if cone_order(u, hull[(i + 1) % len(hull)]) <= 0:
            raise FanoError("origin_not_interior", "origin is not strictly inside the hull")
    return FanoPolygon(_rotate_to_lex_least(hull))


def make_rational_polygon(points: Iterable) -> RationalPolygon:
    """Validate a CCW cycle of exact rational points around the origin."""
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    if len(pts) < 3:
        raise FanoError("too_few_vertices", f"only {len(pts)} points")
    n = len(pts)
    for i in range(n):
        if cone_order(pts[i], pts[(i + 1) % n]) <= 0:
            raise FanoError("origin_not_interior", "cycle is not CCW around the origin")
        if _cross3(pts[i - 1], pts[i], pts[(i + 1) % n]) <= 0:
            raise FanoError("not_convex", f"vertex {pts[i]} is not a strict corner")
    return RationalPolygon(_rotate_to_lex_least(pts))


def transform(P: FanoPolygon, m: UnimodularMap) -> FanoPolygon:
    """Image polygon under a unimodular map, re-sorted CCW and revalidated."""
    return make_fano_polygon([m.apply(p) for p in P.vertices])


def barycenter(Q) -> RationalPoint:
    """Exact barycenter of a Fano or rational polygon.

    Computed as sum((v_i + v_{i+1}) * ord(v_i, v_{i+1})) over the edge
    cycle, divided by three times the sum of the edge orders (the
    shoelace-weighted vertex formula). One code path serves both the
    lattice and the rational case.
    """
    vs = Q.vertices
    n = len(vs)
    sx = sy = Fraction(0)
    total = Fraction(0)
    for i in range(n):
        u = vs[i]
        v = vs[(i + 1) % n]
        a = cone_order(u, v)
        sx += (u[0] + v[0]) * a
        sy += (u[1] + v[1]) * a
        total += a
    return (Fraction(sx, 3 * total), Fraction(sy, 3 * total))


def dual(P: FanoPolygon) -> RationalPolygon:
    """Dual polygon of ``P``: one rational vertex per edge of ``P``.

    The vertex dual to the edge (v_i, v_{i+1}) is
    ``(y_i - y_{i+1}, x_{i+1} - x_i) / ord(v_i, v_{i+1})`` and pairs to -1
    with both edge endpoints.
    """
    out = []
    for (xi, yi), (xj, yj) in P.edges():
        a = xi * yj - yi * xj
        out.append((Fraction(yi - yj, a), Fraction(xj - xi, a)))
    return make_rational_polygon(out)


def _dual_moment_sum(P: FanoPolygon):
    """Edge-order weighted vertex sum of the dual, via the vertex identity.

    The i-th dual edge order equals
    (a_{i,i+1} + a_{i+1,i+2} + a_{i+2,i}) / (a_{i,i+1} * a_{i+1,i+2}),
    so this sum vanishes exactly when the dual barycenter does. It never
    constructs the dual polygon, which makes it an independent route to
    the Kahler-Einstein test.
    """
    vs = P.vertices
    n = len(vs)
    orders = P.edge_orders()
    sx = sy = Fraction(0)
    for i in range(n):
        vi = vs[i]
        vj = vs[(i + 1) % n]
        vk = vs[(i + 2) % n]
        ai = orders[i]
        aj = orders[(i + 1) % n]
        closing = cone_order(vk, vi)
        coef = Fraction(ai + aj + closing, ai * aj)
        sx += coef * (Fraction(vi[0] - vj[0], ai) + Fraction(vj[0] - vk[0], aj))
        sy += coef * (Fraction(vi[1] - vj[1], ai) + Fraction(vj[1] - vk[1], aj))
    return sx, sy


def is_kahler_einstein(P: FanoPolygon) -> bool:
    """True iff the barycenter of the dual polygon is the origin.

    Evaluates the criterion twice: from the dual polygon itself, and from
    the vertex-only sum of :func:`_dual_moment_sum`. The two routes must
    agree; disagreement raises :class:`InternalCheckError`.
    """
    ke_dual = barycenter(dual(P)) == (0, 0)
    ke_sum = _dual_moment_sum(P) == (0, 0)
    if ke_dual != ke_sum:
        raise InternalCheckError(
            f"Kahler-Einstein criteria disagree on {P.vertices}: "
            f"dual barycenter {ke_dual}, vertex sum {ke_sum}"
        )
    return ke_dual


def _oriented_cycles(P: FanoPolygon):
    """The CCW vertex cycle of P and of its mirror image, with base maps."""
    yield P.vertices, None
    mirrored = tuple(reversed([FLIP_Y.apply(p) for p in P.vertices]))
    yield mirrored, FLIP_Y


def _candidates(P: FanoPolygon):
    """All normalized vertex sequences of P, with the maps that made them.

    For each directed edge of P and of its mirror image, the unique
    cone-basis normalization of that edge is applied to the whole cycle.
    Any equivalence between polygons sends directed edges to directed
    edges, so equivalent polygons generate identical candidate sets.
    """
    for cycle, base in _oriented_cycles(P):
        n = len(cycle)
        for i in range(n):
            m, _, _ = normalize_cone_basis(cycle[i], cycle[(i + 1) % n])
            seq = tuple(m.apply(cycle[(i + j) % n]) for j in range(n))
            yield seq, (m if base is None else m.compose(base))


def canonical_form(P: FanoPolygon) -> tuple[LatticePoint, ...]:
    """Canonical vertex sequence: equal for exactly the equivalent polygons.

    Returns the lexicographically least of the candidate sequences of
    :func:`_candidates` (compared as flattened integer tuples). The result
    is the vertex cycle of an actual polygon in the class and can be fed
    back to :func:`make_fano_polygon`.
    """
    return min(seq for seq, _ in _candidates(P))


def are_equivalent(P: FanoPolygon, Q: FanoPolygon) -> Optional[UnimodularMap]:
    """A unimodular witness sending P onto Q, or None.

    Consistent with :func:`canonical_form` equality by construction.
    """
    if P.vertex_count != Q.vertex_count:
        return None
    seq_p, map_p = min(_candidates(P), key=lambda c: c[0])
    seq_q, map_q = min(_candidates(Q), key=lambda c: c[0])
    if seq_p != seq_q:
        return None
    witness = map_q.inverse().compose(map_p)
    assert set(witness.apply(p) for p in P.vertices) == set(Q.vertices)
    return witness


def polygon_from_json_dict(obj: dict) -> FanoPolygon:
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise FanoError("bad_polygon_json", "expected an object with a 'vertices' key")
    verts = obj["vertices"]
    if not isinstance(verts, list) or not all(
        isinstance(p, (list, tuple)) and len(p) == 2 for p in verts
    ):
        raise FanoError("bad_polygon_json", "'vertices' must be a list of [x, y] pairs")
    for p in verts:
        if not all(isinstance(c, int) for c in p):
            raise FanoError("bad_polygon_json", f"non-integer coordinate in {p}")
    return make_fano_polygon([(p[0], p[1]) for p in verts])
