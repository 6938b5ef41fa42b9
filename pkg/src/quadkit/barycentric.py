"""Barycentric coordinates from signed-area ratios.

Solving the four-point identity for its last point expresses any P as an
affine combination of a reference triangle A, B, C:

    P = (K_BCP / K_ABC) * A  +  (-K_ACP / K_ABC) * B  +  (K_ABP / K_ABC) * C

The weights sum to one exactly (the decomposition equality rearranged),
and their signs classify P against the triangle.  Classification is
orientation-independent because the weights are ratios of signed areas.

Degenerate reference triangles (zero area) raise rather than producing
NaN-like garbage: the identity itself survives degeneracy, the
normalization does not.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .geometry import Point2, signed_area
from .scalar import Scalar, ToleranceSpec


class DegenerateTriangleError(ValueError):
    """Reference triangle has zero signed area."""

    def __init__(self, a: Point2, b: Point2, c: Point2):
        super().__init__(f"degenerate reference triangle {a}, {b}, {c}")
        self.triangle = (a, b, c)


@dataclass(frozen=True)
class BaryCoords:
    """Weights of A, B, C for some point; la + lb + lc = 1."""

    la: Scalar
    lb: Scalar
    lc: Scalar


class Region(Enum):
    INTERIOR = "Interior"
    EDGE = "OnEdge"
    VERTEX = "OnVertex"
    EXTERIOR = "Exterior"


@dataclass(frozen=True)
class Location:
    """Classification of a point against a reference triangle.

    ``feature`` names the edge ("AB", "BC", "CA") or vertex ("A", "B",
    "C") for boundary cases, and is None otherwise.
    """

    region: Region
    feature: Optional[str] = None

    def __str__(self) -> str:
        if self.feature is None:
            return self.region.value
        return f"{self.region.value}({self.feature})"


def area_weights(
    p: Point2, a: Point2, b: Point2, c: Point2
) -> tuple[Scalar, Scalar, Scalar, Scalar]:
    """Unnormalized weights (K_BCP, -K_ACP, K_ABP) plus the normalizer
    K_ABC.  Division-free: usable even when the triangle is degenerate."""
    return (
        signed_area(b, c, p),
        -signed_area(a, c, p),
        signed_area(a, b, p),
        signed_area(a, b, c),
    )


def barycentric_of(p: Point2, a: Point2, b: Point2, c: Point2) -> BaryCoords:
    """Barycentric coordinates of p with respect to triangle a, b, c.

    Raises DegenerateTriangleError when the triangle has zero area.
    """
    wa, wb, wc, k_abc = area_weights(p, a, b, c)
    if k_abc == 0:
        raise DegenerateTriangleError(a, b, c)
    return BaryCoords(wa / k_abc, wb / k_abc, wc / k_abc)


def reconstruct(bc: BaryCoords, a: Point2, b: Point2, c: Point2) -> Point2:
    """la*A + lb*B + lc*C as a position (well-defined because the weights
    sum to one)."""
    return Point2(
        bc.la * a.x + bc.lb * b.x + bc.lc * c.x,
        bc.la * a.y + bc.lb * b.y + bc.lc * c.y,
    )


def classify(
    p: Point2,
    a: Point2,
    b: Point2,
    c: Point2,
    tolerance: Optional[ToleranceSpec] = None,
) -> Location:
    """Locate p relative to triangle a, b, c from its weight signs.

    Interior: all weights strictly positive.  OnVertex: one weight is 1.
    OnEdge: exactly one weight is 0, the others strictly positive.
    Exterior: anything else.  With a ``tolerance`` (float backend),
    weights within ``relative_epsilon`` of 0 or 1 are snapped to the
    boundary before classifying; exact inputs are classified by exact
    sign tests.
    """
    coords = barycentric_of(p, a, b, c)
    weights = [coords.la, coords.lb, coords.lc]
    if tolerance is not None:
        snap = tolerance.relative_epsilon * max(
            1.0, *(abs(w) for w in weights)
        )
        weights = [_snap(w, snap) for w in weights]

    if any(w < 0 for w in weights):
        return Location(Region.EXTERIOR)
    zeros = [w == 0 for w in weights]
    # Weights sum to 1, so two zeros force the remaining weight to be 1.
    if sum(zeros) == 2:
        vertex = "ABC"[zeros.index(False)]
        return Location(Region.VERTEX, vertex)
    if sum(zeros) == 1:
        edge = ("BC", "CA", "AB")[zeros.index(True)]
        return Location(Region.EDGE, edge)
    return Location(Region.INTERIOR)


def _snap(w: Scalar, eps: float) -> Scalar:
    if abs(w) <= eps:
        return 0
    if abs(w - 1) <= eps:
        return 1
    return w
