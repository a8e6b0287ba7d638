"""Exact integer kernel: lattice points, 2x2 unimodular maps, cone order.

Everything here is pure and exact. Lattice points are plain ``(x, y)``
tuples of Python ints (arbitrary precision, so census determinants and
shears can never overflow). The only class is :class:`UnimodularMap`,
the group element of the equivalence relation on polygons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

from .errors import FanoError

LatticePoint = Tuple[int, int]


def primitive_index(v: LatticePoint) -> int:
    """gcd of the absolute coordinates of ``v``; 1 means primitive.

    Raises ``FanoError("zero_point")`` for the origin, which has no
    primitive index.
    """
    x, y = v
    if x == 0 and y == 0:
        raise FanoError("zero_point", "primitive index of (0,0) is undefined")
    return math.gcd(x, y)


def is_primitive(v: LatticePoint) -> bool:
    x, y = v
    return math.gcd(x, y) == 1


def cone_order(u, v):
    """Signed order of the cone spanned by ``u`` then ``v``.

    This is the 2x2 determinant ``u.x*v.y - u.y*v.x``; positive exactly
    when ``v`` lies counterclockwise of ``u`` by less than a half turn.
    Works unchanged for exact rational coordinates. The sign is kept
    everywhere; callers take absolute values only at singularity-type
    boundaries.
    """
    return u[0] * v[1] - u[1] * v[0]


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


@dataclass(frozen=True, slots=True)
class UnimodularMap:
    """Integral 2x2 matrix of determinant +-1, row-major entries a,b,c,d."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        if det not in (1, -1):
            raise FanoError(
                "not_unimodular",
                f"matrix [[{self.a},{self.b}],[{self.c},{self.d}]] has determinant {det}",
            )

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def apply(self, p):
        """Image of point ``p`` (works on integer or rational pairs)."""
        x, y = p
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def compose(self, other: "UnimodularMap") -> "UnimodularMap":
        """Matrix product self*other, i.e. apply ``other`` first."""
        return UnimodularMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "UnimodularMap":
        # adj/det, and 1/det == det for det = +-1
        s = self.det
        return UnimodularMap(self.d * s, -self.b * s, -self.c * s, self.a * s)

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    @classmethod
    def identity(cls) -> "UnimodularMap":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_rows(cls, rows) -> "UnimodularMap":
        (a, b), (c, d) = rows
        return cls(int(a), int(b), int(c), int(d))


IDENTITY = UnimodularMap(1, 0, 0, 1)
# Reflection across the x-axis; the fixed orientation-reverser used by
# canonical forms.
FLIP_Y = UnimodularMap(1, 0, 0, -1)


def normalize_cone_basis(u: LatticePoint, v: LatticePoint):
    """Bring the ordered pair (u, v) to the normal form (0,1), (n,-k).

    Returns ``(M, n, k)`` where ``M`` is the unique unimodular map with
    ``M(u) == (0, 1)`` and ``M(v) == (n, -k)``, ``n == |cone_order(u, v)|``
    and ``0 < k <= n`` with ``gcd(n, k) == 1``.

    The construction completes ``u`` to a basis via the extended gcd,
    flips the first coordinate's sign if needed, then applies the unique
    lower shear fixing (0,1) that lands the second coordinate in
    ``[-n, -1]``. Uniqueness: the stabilizer of (0,1) in GL(2,Z) is
    generated by that flip and the unit lower shears, and none of its
    nontrivial elements preserves the target window.
    """
    if not is_primitive(u):
        raise FanoError("not_primitive", f"{u} is not primitive")
    if not is_primitive(v):
        raise FanoError("not_primitive", f"{v} is not primitive")
    if cone_order(u, v) == 0:
        raise FanoError("collinear_pair", f"{u} and {v} span no cone")

    p, q = u
    _, c, d = _egcd(p, q)  # c*p + d*q == 1
    m = UnimodularMap(q, -p, c, d)  # det +1, sends u to (0,1)
    x1, y1 = m.apply(v)
    if x1 < 0:
        m = UnimodularMap(-1, 0, 0, 1).compose(m)
        x1, y1 = -x1, y1
    n = x1
    t = (-1 - y1) // n
    if t != 0:
        m = UnimodularMap(1, 0, t, 1).compose(m)
    k = -(y1 + t * n)
    assert m.apply(u) == (0, 1) and m.apply(v) == (n, -k)
    assert 0 < k <= n and math.gcd(n, k) == 1
    return m, n, k
