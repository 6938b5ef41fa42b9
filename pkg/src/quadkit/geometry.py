"""Planar points, displacement vectors, and the signed-area primitive.

Positions and displacements are distinct types: subtracting two points
yields a :class:`Vec2`, and only a Vec2 can translate a point.  That
distinction keeps affine bookkeeping honest when identities are evaluated
over formal point variables.

Orientation convention: in a y-up coordinate system, ``signed_area`` is
positive for counterclockwise triples, negative for clockwise, zero for
collinear.  Quadrilateral area is *defined* as the two-triangle
decomposition ``signed_area(A,B,D) + signed_area(B,C,D)``, which is
well-defined even for crossed and degenerate vertex sequences.

All coordinates are backend scalars (int/Fraction or float); every
function here is generic over them and pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalar import Scalar

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Vec2:
    """Planar displacement."""

    dx: Scalar
    dy: Scalar

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.dx + other.dx, self.dy + other.dy)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.dx - other.dx, self.dy - other.dy)

    def __neg__(self) -> "Vec2":
        return Vec2(-self.dx, -self.dy)

    def __rmul__(self, k: Scalar) -> "Vec2":
        return Vec2(k * self.dx, k * self.dy)


@dataclass(frozen=True)
class Point2:
    """Planar position."""

    x: Scalar
    y: Scalar

    def __sub__(self, other: "Point2") -> Vec2:
        return Vec2(self.x - other.x, self.y - other.y)

    def __add__(self, v: Vec2) -> "Point2":
        return Point2(self.x + v.dx, self.y + v.dy)

    def position(self) -> Vec2:
        """Position vector relative to the origin."""
        return Vec2(self.x, self.y)


@dataclass(frozen=True)
class Vec3:
    """3-vector for the cross-product embedding of the plane."""

    x: Scalar
    y: Scalar
    z: Scalar

    def __add__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Vec3":
        return Vec3(-self.x, -self.y, -self.z)

    def __rmul__(self, k: Scalar) -> "Vec3":
        return Vec3(k * self.x, k * self.y, k * self.z)


ORIGIN = Point2(0, 0)


def signed_area(a: Point2, b: Point2, c: Point2) -> Scalar:
    """Signed triangle area: half the z-component of (b-a) x (c-a).

    Positive iff a, b, c are counterclockwise; zero iff collinear.
    """
    return HALF * (
        (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    )


def quad_signed_area(a: Point2, b: Point2, c: Point2, d: Point2) -> Scalar:
    """Signed quadrilateral area via the diagonal-BD decomposition.

    Equals the enclosed area for simple counterclockwise quadrilaterals,
    and equals the diagonal-AC decomposition
    ``signed_area(a,c,d) + signed_area(a,b,c)`` for every vertex sequence.
    """
    return signed_area(a, b, d) + signed_area(b, c, d)


def perp(v: Vec2) -> Vec2:
    """Rotate a displacement through a quarter turn in the positive
    direction: (dx, dy) -> (-dy, dx)."""
    return Vec2(-v.dy, v.dx)


def embed(p: Point2) -> Vec3:
    """Embed a planar position into 3-space with z = 0."""
    return Vec3(p.x, p.y, 0)


def embed_vec(v: Vec2) -> Vec3:
    """Embed a planar displacement into 3-space with z = 0."""
    return Vec3(v.dx, v.dy, 0)


def cross3(u: Vec3, v: Vec3) -> Vec3:
    """Standard 3-space cross product (right-hand rule)."""
    return Vec3(
        u.y * v.z - u.z * v.y,
        u.z * v.x - u.x * v.z,
        u.x * v.y - u.y * v.x,
    )


def dot2(u: Vec2, v: Vec2) -> Scalar:
    """Planar dot product."""
    return u.dx * v.dx + u.dy * v.dy
