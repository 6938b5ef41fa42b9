"""Scalar backends for the geometry kernel.

Every geometric operation in this package is generic over two numeric
backends, chosen once when input text is parsed and never mixed within a
computation:

* ``exact``  — arbitrary-precision rationals (:class:`fractions.Fraction`,
  with plain ``int`` as the denominator-1 special case).  Arithmetic is a
  true field: associative, commutative, distributive, with decidable
  equality.  Identity checks on this backend demand residuals that are
  exactly zero.
* ``float``  — IEEE-754 binary64.  Equality is never used for identity
  checks here; residuals are compared against a relative tolerance
  (:class:`ToleranceSpec`).

Scalar text grammar (both backends): an optional sign followed by digits,
optionally with a decimal part (``-3``, ``0.5``), or a fraction ``p/q``
with integer ``p`` and positive integer ``q`` (``7/14``).  Decimal text is
parsed as the exact rational it denotes — ``0.1`` is 1/10, never a binary
approximation — so the float backend's value is the correctly rounded
double of the true rational.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction, float]

EXACT = "exact"
FLOAT = "float"
BACKENDS = (EXACT, FLOAT)

_SCALAR_RE = re.compile(
    r"""^[+-]?
        (?: \d+ (?:\.\d+)?   # integer or decimal
          | \d+ / \d+        # fraction p/q
        )$""",
    re.VERBOSE,
)


class ScalarParseError(ValueError):
    """Input text does not match the scalar grammar."""


def parse_scalar(text: str, backend: str = EXACT) -> Scalar:
    """Parse scalar text under the given backend.

    Raises ScalarParseError for text outside the grammar and
    ZeroDivisionError for a fraction with denominator zero.
    """
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")
    stripped = text.strip()
    if not _SCALAR_RE.match(stripped):
        raise ScalarParseError(f"not a scalar: {text!r}")
    if "/" in stripped:
        num_text, _, den_text = stripped.partition("/")
        num = int(num_text)
        den = int(den_text)
        if den == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        value = Fraction(num, den)
    else:
        # Fraction parses decimal text exactly: "0.1" -> 1/10.
        value = Fraction(stripped)
    if backend == FLOAT:
        # Correctly rounded: CPython converts the exact ratio to the
        # nearest double.  Values beyond the double range round to
        # infinity, as IEEE round-to-nearest prescribes.
        try:
            return value.numerator / value.denominator
        except OverflowError:
            return math.inf if value > 0 else -math.inf
    return value


def format_scalar(value: Scalar) -> str:
    """Canonical text for a scalar: reduced ``p/q`` (bare ``p`` when the
    denominator is 1) on the exact backend, shortest round-trip decimal on
    the float backend."""
    if isinstance(value, bool):
        raise TypeError("not a scalar")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return repr(value)
    raise TypeError(f"not a scalar: {value!r}")


@dataclass(frozen=True)
class ToleranceSpec:
    """Relative tolerance rule for float-backend residuals.

    A residual ``r`` of an identity instance passes when
    ``|r| <= relative_epsilon * scale`` where ``scale`` is the largest
    ``|coefficient| * |coordinate|`` over the instance's terms.  The
    default 1e-9 sits a few orders of magnitude above the round-off of a
    well-conditioned evaluation while still exposing sign errors.
    """

    relative_epsilon: float = 1e-9

    def bound(self, scale: float) -> float:
        return self.relative_epsilon * abs(scale)

    def within(self, residual: float, scale: float) -> bool:
        # Non-finite residuals (overflowed inputs) never pass.
        return math.isfinite(residual) and abs(residual) <= self.bound(scale)


DEFAULT_TOLERANCE = ToleranceSpec()
