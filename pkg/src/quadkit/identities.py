"""Signed-area identities for four planar points, as residuals.

The central fact: for any four points A, B, C, D with signed triangle
areas K (subscript = the three vertices used, signs alternating),

    K_BCD * A  -  K_ACD * B  +  K_ABD * C  -  K_ABC * D  =  0

as an identity of position vectors.  It holds for *every* quadruple —
convex, non-convex, crossed, collinear, coincident — because the K's are
signed.  Each supporting lemma of the proof route (translation
invariance, area decomposition, the cross-product magnitude and rotation
facts, the vector triple-product identity) is exposed here as its own
residual.

Every function returns the quantity that the corresponding identity
asserts to vanish.  On the exact backend the residual must be exactly
zero; on the float backend callers compare it against a ToleranceSpec
using the matching ``*_scale`` helper.  Booleans are deliberately not
returned: residual magnitudes are the primary observable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import (
    Point2,
    Vec2,
    Vec3,
    cross3,
    embed,
    embed_vec,
    perp,
    quad_signed_area,
    signed_area,
)
from .scalar import Scalar


@dataclass(frozen=True)
class QuadConfig:
    """An ordered quadruple of planar points.  No shape constraints."""

    a: Point2
    b: Point2
    c: Point2
    d: Point2

    def translated(self, x: Vec2) -> "QuadConfig":
        return QuadConfig(self.a + x, self.b + x, self.c + x, self.d + x)

    def points(self) -> tuple[Point2, Point2, Point2, Point2]:
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class AreaQuadruple:
    """The four signed triangle areas of a quadruple.

    Satisfies k_bcd - k_acd + k_abd = k_abc exactly on the exact backend
    (a rearrangement of the two-diagonal decomposition equality).
    """

    k_bcd: Scalar
    k_acd: Scalar
    k_abd: Scalar
    k_abc: Scalar


def area_quadruple(q: QuadConfig) -> AreaQuadruple:
    """The four coefficients of the identity, in subscript order."""
    return AreaQuadruple(
        k_bcd=signed_area(q.b, q.c, q.d),
        k_acd=signed_area(q.a, q.c, q.d),
        k_abd=signed_area(q.a, q.b, q.d),
        k_abc=signed_area(q.a, q.b, q.c),
    )


def jacobi_residual(q: QuadConfig) -> Vec2:
    """K_BCD*A - K_ACD*B + K_ABD*C - K_ABC*D, points read as position
    vectors.  Exactly (0, 0) on the exact backend, always."""
    ks = area_quadruple(q)
    return Vec2(
        ks.k_bcd * q.a.x - ks.k_acd * q.b.x + ks.k_abd * q.c.x - ks.k_abc * q.d.x,
        ks.k_bcd * q.a.y - ks.k_acd * q.b.y + ks.k_abd * q.c.y - ks.k_abc * q.d.y,
    )


def jacobi_scale(q: QuadConfig) -> Scalar:
    """Tolerance scale for the float backend: the largest
    |coefficient| * |coordinate| over the identity's terms."""
    ks = area_quadruple(q)
    return max(
        abs(k) * max(abs(p.x), abs(p.y))
        for k, p in zip(
            (ks.k_bcd, ks.k_acd, ks.k_abd, ks.k_abc), q.points()
        )
    )


def decomposition_residual(q: QuadConfig) -> tuple[Scalar, Scalar]:
    """Both diagonal decompositions against the quadrilateral area:
    (K_BCD + K_ABD - K_ABCD, K_ACD + K_ABC - K_ABCD)."""
    ks = area_quadruple(q)
    k_abcd = quad_signed_area(q.a, q.b, q.c, q.d)
    return (
        ks.k_bcd + ks.k_abd - k_abcd,
        ks.k_acd + ks.k_abc - k_abcd,
    )


def decomposition_scale(q: QuadConfig) -> Scalar:
    ks = area_quadruple(q)
    k_abcd = quad_signed_area(q.a, q.b, q.c, q.d)
    return max(
        abs(ks.k_bcd), abs(ks.k_acd), abs(ks.k_abd), abs(ks.k_abc), abs(k_abcd)
    )


def translation_invariance_residual(q: QuadConfig, x: Vec2) -> Vec2:
    """Residual of the translated quadruple minus the original's.
    Zero because the areas are translation-invariant and the total point
    weight K_BCD - K_ACD + K_ABD - K_ABC vanishes."""
    return jacobi_residual(q.translated(x)) - jacobi_residual(q)


def triple_product_residual(a: Vec3, b: Vec3, c: Vec3) -> Vec3:
    """(b x c) x a - (a x c) x b + (a x b) x c for arbitrary 3-vectors.
    Zero by the Jacobi identity for the vector triple product."""
    return (
        cross3(cross3(b, c), a)
        - cross3(cross3(a, c), b)
        + cross3(cross3(a, b), c)
    )


def cross_magnitude_residual(b: Point2, c: Point2) -> Vec3:
    """Embedded cross product against its area reading:
    B x C - (0, 0, 2 * signed_area(O, B, C)) with O the origin."""
    origin = Point2(0, 0)
    expected_z = 2 * signed_area(origin, b, c)
    return cross3(embed(b), embed(c)) - Vec3(0, 0, expected_z)


def rotation_lemma_residual(a: Point2) -> Vec3:
    """k x A against the quarter-turn of A, where k = (0, 0, 1):
    crossing with the plane normal is rotation through a positive
    quarter turn."""
    k = Vec3(0, 0, 1)
    return cross3(k, embed(a)) - embed_vec(perp(a.position()))
