"""Closed-form polygon families.

Two families recur throughout the classification results:

* ``make_smn(m, n)`` - the quadrilateral with vertices (m+1,-m), (-m,m+1),
  (-n-1,n), (n,-n-1). It is preserved by the coordinate swap, has Picard
  number two, and is Kahler-Einstein exactly when m == n.
* ``make_ke_triangle(a, b)`` - the triangle with vertices (a,-b), (0,1),
  (-a,b-1) for coprime data; its barycenter is the origin, which for a
  triangle forces the dual barycenter to vanish as well.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import FanoError
from .invariants import SingularityType
from .polygon import (
    FanoPolygon,
    RationalPoint,
    RationalPolygon,
    canonical_form,
    make_fano_polygon,
    make_rational_polygon,
)


def make_smn(m: int, n: int) -> FanoPolygon:
    """The mirror-symmetric quadrilateral with parameters m, n >= 0."""
    if m < 0 or n < 0:
        raise FanoError("bad_parameters", f"m, n must be non-negative, got ({m}, {n})")
    P = make_fano_polygon([(m + 1, -m), (-m, m + 1), (-n - 1, n), (n, -n - 1)])
    assert P.vertex_count == 4
    return P


def smn_dual_closed_form(m: int, n: int) -> tuple[RationalPolygon, RationalPoint]:
    """Dual vertices and dual barycenter of ``make_smn(m, n)``, emitted
    from the closed formulas rather than recomputed.

    With D = m + n + 1 the dual is the quadrilateral on (-1,-1),
    ((m-n+1)/D, (m-n-1)/D), (1,1), ((m-n-1)/D, (m-n+1)/D) and its
    barycenter is ((m-n)/(3D), (m-n)/(3D)); it vanishes iff m == n.
    """
    if m < 0 or n < 0:
        raise FanoError("bad_parameters", f"m, n must be non-negative, got ({m}, {n})")
    d = m + n + 1
    poly = make_rational_polygon(
        [
            (-1, -1),
            (Fraction(m - n + 1, d), Fraction(m - n - 1, d)),
            (1, 1),
            (Fraction(m - n - 1, d), Fraction(m - n + 1, d)),
        ]
    )
    bary = (Fraction(m - n, 3 * d), Fraction(m - n, 3 * d))
    return poly, bary


def make_ke_triangle(a: int, b: int) -> FanoPolygon:
    """The barycentric triangle (a,-b), (0,1), (-a,b-1).

    Requires positive a, b with gcd(a,b) = gcd(a,b-1) = 1 (for b = 1 that
    forces a = 1, the plane case). Every member passes the
    Kahler-Einstein test.
    """
    if a < 1 or b < 1:
        raise FanoError("bad_parameters", f"a, b must be positive, got ({a}, {b})")
    if math.gcd(a, b) != 1:
        raise FanoError("gcd_violation", f"gcd({a},{b}) = {math.gcd(a, b)} != 1")
    if math.gcd(a, b - 1) != 1:
        raise FanoError("gcd_violation", f"gcd({a},{b-1}) = {math.gcd(a, b - 1)} != 1")
    return make_fano_polygon([(a, -b), (0, 1), (-a, b - 1)])


def ke_triangle_types(a: int, b: int) -> tuple[SingularityType, ...]:
    """Singularity types of the three charts of ``make_ke_triangle(a, b)``.

    For a == 1 all three charts are smooth. Otherwise the types are
    1/a(1,b), 1/a(1,a-b+1) and 1/a(1,y+1), where y is the unique integer
    with 0 < y < a and b*y = -1 modulo a. All residues are reduced into
    (0, a].
    """
    if a < 1 or b < 1:
        raise FanoError("bad_parameters", f"a, b must be positive, got ({a}, {b})")
    if math.gcd(a, b) != 1 or math.gcd(a, b - 1) != 1:
        raise FanoError("gcd_violation", f"({a}, {b}) violates the coprimality rules")
    if a == 1:
        smooth = SingularityType(1, 1)
        return (smooth, smooth, smooth)
    y = (-pow(b, -1, a)) % a
    return (
        SingularityType(a, b % a),
        SingularityType(a, (a - b + 1) % a),
        SingularityType(a, y + 1),
    )


def recognize_ke_triangle(P: FanoPolygon):
    """Parameters (a, b) with P equivalent to ``make_ke_triangle(a, b)``,
    or None.

    All three edges of a family member have cone order a, so twice the
    area pins a = (2*area)/3 and only b in 1..a remains to try.
    """
    if P.vertex_count != 3:
        return None
    area2 = sum(P.edge_orders())
    if area2 % 3 != 0:
        return None
    a = area2 // 3
    cf = canonical_form(P)
    for b in range(1, a + 1):
        if math.gcd(a, b) != 1 or math.gcd(a, b - 1) != 1:
            continue
        if canonical_form(make_ke_triangle(a, b)) == cf:
            return (a, b)
    return None
