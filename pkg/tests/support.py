"""Shared oracles and hypothesis strategies for the test suite.

The oracles here deliberately use different formulas from the package
(raw alternating-sum shoelace, Cramer's rule, edge-sign classification)
so expected values are computed on an independent route.
"""

from fractions import Fraction
from random import Random

from hypothesis import strategies as st

from quadkit import Point2, QuadConfig, Vec2, Vec3

COORD_BOUND = 10**6


def shoelace(a, b, c) -> Fraction:
    """Signed triangle area by the raw alternating-sum shoelace formula."""
    return Fraction(
        a.x * b.y - b.x * a.y + b.x * c.y - c.x * b.y + c.x * a.y - a.x * c.y,
        2,
    )


def cramer_barycentric(p, a, b, c):
    """Barycentric weights by solving the 3x3 affine system directly."""

    def det3(m):
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )

    denom = det3([[a.x, b.x, c.x], [a.y, b.y, c.y], [1, 1, 1]])
    la = det3([[p.x, b.x, c.x], [p.y, b.y, c.y], [1, 1, 1]])
    lb = det3([[a.x, p.x, c.x], [a.y, p.y, c.y], [1, 1, 1]])
    lc = det3([[a.x, b.x, p.x], [a.y, b.y, p.y], [1, 1, 1]])
    return (Fraction(la, denom), Fraction(lb, denom), Fraction(lc, denom))


def edge_sign_classify(p, a, b, c) -> str:
    """Independent point-vs-triangle classification from edge orientation
    signs, as 'Interior', 'OnVertex(X)', 'OnEdge(XY)', or 'Exterior'."""
    if p == a:
        return "OnVertex(A)"
    if p == b:
        return "OnVertex(B)"
    if p == c:
        return "OnVertex(C)"

    def sign(x):
        return (x > 0) - (x < 0)

    ref = sign(shoelace(a, b, c))
    s_ab = sign(shoelace(a, b, p))
    s_bc = sign(shoelace(b, c, p))
    s_ca = sign(shoelace(c, a, p))
    if s_ab == s_bc == s_ca == ref:
        return "Interior"
    zero_edges = [
        edge for s, edge in ((s_bc, "BC"), (s_ca, "CA"), (s_ab, "AB")) if s == 0
    ]
    others = [s for s in (s_ab, s_bc, s_ca) if s != 0]
    if len(zero_edges) == 1 and all(s == ref for s in others):
        return f"OnEdge({zero_edges[0]})"
    return "Exterior"


def rand_fraction(rng: Random, num_bound=COORD_BOUND, den_bound=1000) -> Fraction:
    return Fraction(rng.randint(-num_bound, num_bound), rng.randint(1, den_bound))


def rand_point(rng: Random, **kwargs) -> Point2:
    return Point2(rand_fraction(rng, **kwargs), rand_fraction(rng, **kwargs))


# --- hypothesis strategies --------------------------------------------------

coords_int = st.integers(min_value=-COORD_BOUND, max_value=COORD_BOUND)
coords_rational = st.fractions(
    min_value=-COORD_BOUND, max_value=COORD_BOUND, max_denominator=1000
)
coords_any = st.one_of(coords_int, coords_rational)

points = st.builds(Point2, coords_any, coords_any)
vec2s = st.builds(Vec2, coords_any, coords_any)
vec3s = st.builds(Vec3, coords_any, coords_any, coords_any)

quads_generic = st.builds(QuadConfig, points, points, points, points)


@st.composite
def quads_degenerate(draw):
    """Collinear or partially coincident quadruples."""
    base = draw(points)
    if draw(st.booleans()):
        direction = draw(vec2s)
        ts = [draw(st.integers(min_value=-5, max_value=5)) for _ in range(4)]
        return QuadConfig(*(base + t * direction for t in ts))
    others = [draw(points) for _ in range(2)]
    pool = [base, *others]
    picks = [draw(st.integers(min_value=0, max_value=2)) for _ in range(4)]
    return QuadConfig(*(pool[i] for i in picks))


quads = st.one_of(quads_generic, quads_degenerate())
