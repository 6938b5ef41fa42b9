"""Seeded quadruple generators for batch verification.

Each kind produces integer-coordinate quadruples that certifiably satisfy
its shape class, exercising the full range of configurations the identity
must survive: generic position, convex, non-convex, self-intersecting,
collinear, and coincident.  Output is a pure function of the spec (one
sequential RNG), so a fixed seed reproduces the stream byte for byte.

``certificate_holds`` re-checks a quadruple against its kind's defining
predicate and is used both as a generation postcondition and by tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import Iterator

from .geometry import Point2
from .identities import QuadConfig

KINDS = ("random", "convex", "nonconvex", "crossed", "collinear", "coincident")

IntPoint = tuple[int, int]


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    count: int
    seed: int
    coordinate_range: int = 10**6

    def validate(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.count < 0:
            raise ValueError("count must be non-negative")
        if self.coordinate_range < 8:
            raise ValueError("coordinate_range must be at least 8")


def _orient(p: IntPoint, q: IntPoint, r: IntPoint) -> int:
    """Doubled signed area of the triple; sign is the orientation."""
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _hull(points: list[IntPoint]) -> list[IntPoint]:
    """Strict convex hull in counterclockwise order (collinear points
    dropped)."""
    pts = sorted(set(points))
    if len(pts) < 3:
        return pts
    lower: list[IntPoint] = []
    for p in pts:
        while len(lower) >= 2 and _orient(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[IntPoint] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _orient(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _random_point(rng: Random, bound: int) -> IntPoint:
    return (rng.randint(-bound, bound), rng.randint(-bound, bound))


def _convex_position(rng: Random, bound: int) -> list[IntPoint]:
    """Four points in strictly convex position, counterclockwise."""
    while True:
        hull = _hull([_random_point(rng, bound) for _ in range(4)])
        if len(hull) == 4:
            return hull


def _gen_random(rng: Random, bound: int) -> tuple[IntPoint, ...]:
    return tuple(_random_point(rng, bound) for _ in range(4))


def _gen_convex(rng: Random, bound: int) -> tuple[IntPoint, ...]:
    hull = _convex_position(rng, bound)
    if rng.randrange(2):
        hull.reverse()  # clockwise quadrilaterals are convex too
    start = rng.randrange(4)
    return tuple(hull[start:] + hull[:start])


def _gen_nonconvex(rng: Random, bound: int) -> tuple[IntPoint, ...]:
    # A triangle with the fourth vertex strictly inside makes the
    # boundary a simple polygon with one reflex corner.
    while True:
        a, b, c = (_random_point(rng, bound) for _ in range(3))
        turn = _orient(a, b, c)
        if turn == 0:
            continue
        lo_x = min(a[0], b[0], c[0])
        hi_x = max(a[0], b[0], c[0])
        lo_y = min(a[1], b[1], c[1])
        hi_y = max(a[1], b[1], c[1])
        for _ in range(64):
            d = (rng.randint(lo_x, hi_x), rng.randint(lo_y, hi_y))
            if (
                _sign(_orient(a, b, d)) == _sign(turn)
                and _sign(_orient(b, c, d)) == _sign(turn)
                and _sign(_orient(c, a, d)) == _sign(turn)
            ):
                return (a, b, c, d)


def _gen_crossed(rng: Random, bound: int) -> tuple[IntPoint, ...]:
    p0, p1, p2, p3 = _convex_position(rng, bound)
    if rng.randrange(2):
        return (p0, p1, p3, p2)  # edges BC and DA are the diagonals
    return (p0, p2, p1, p3)  # edges AB and CD are the diagonals


def _gen_collinear(rng: Random, bound: int) -> tuple[IntPoint, ...]:
    step = max(1, bound // 8)
    while True:
        direction = (rng.randint(-step, step), rng.randint(-step, step))
        if direction != (0, 0):
            break
    base = _random_point(rng, bound // 2)
    return tuple(
        (base[0] + t * direction[0], base[1] + t * direction[1])
        for t in (rng.randint(-4, 4) for _ in range(4))
    )


_COINCIDENT_PATTERNS = (
    (0, 0, 1, 2),
    (0, 1, 0, 2),
    (0, 1, 2, 0),
    (0, 1, 1, 2),
    (0, 1, 2, 1),
    (0, 1, 2, 2),
    (0, 0, 1, 1),
    (0, 1, 0, 1),
    (0, 1, 1, 0),
    (0, 0, 0, 1),
    (0, 0, 0, 0),
)


def _gen_coincident(rng: Random, bound: int) -> tuple[IntPoint, ...]:
    pattern = _COINCIDENT_PATTERNS[rng.randrange(len(_COINCIDENT_PATTERNS))]
    base = [_random_point(rng, bound) for _ in range(3)]
    return tuple(base[i] for i in pattern)


_GENERATORS = {
    "random": _gen_random,
    "convex": _gen_convex,
    "nonconvex": _gen_nonconvex,
    "crossed": _gen_crossed,
    "collinear": _gen_collinear,
    "coincident": _gen_coincident,
}


def _proper_crossing(
    p: IntPoint, q: IntPoint, r: IntPoint, s: IntPoint
) -> bool:
    """Segments pq and rs intersect in a single interior point."""
    return (
        _sign(_orient(p, q, r)) * _sign(_orient(p, q, s)) < 0
        and _sign(_orient(r, s, p)) * _sign(_orient(r, s, q)) < 0
    )


def certificate_holds(kind: str, quad: tuple[IntPoint, ...]) -> bool:
    """Does the quadruple satisfy its kind's defining predicate?"""
    a, b, c, d = quad
    turns = (
        _orient(a, b, c),
        _orient(b, c, d),
        _orient(c, d, a),
        _orient(d, a, b),
    )
    if kind == "random":
        return True
    if kind == "convex":
        signs = {_sign(t) for t in turns}
        return len(signs) == 1 and 0 not in signs
    if kind == "nonconvex":
        signs = {_sign(t) for t in turns}
        return len(signs) == 2 and 0 not in signs
    if kind == "crossed":
        return _proper_crossing(a, b, c, d) or _proper_crossing(b, c, d, a)
    if kind == "collinear":
        return all(t == 0 for t in turns)
    if kind == "coincident":
        return any(
            quad[i] == quad[j] for i in range(4) for j in range(i + 1, 4)
        )
    raise ValueError(f"unknown generator kind {kind!r}")


def generate_raw(spec: GeneratorSpec) -> Iterator[tuple[IntPoint, ...]]:
    """Integer quadruples for the spec, certificate re-checked."""
    spec.validate()
    rng = Random(spec.seed)
    make = _GENERATORS[spec.kind]
    for _ in range(spec.count):
        quad = make(rng, spec.coordinate_range)
        assert certificate_holds(spec.kind, quad)
        yield quad


def generate_quads(spec: GeneratorSpec) -> Iterator[QuadConfig]:
    """Quadruple stream as QuadConfig values."""
    for quad in generate_raw(spec):
        points = [Point2(x, y) for x, y in quad]
        yield QuadConfig(*points)
