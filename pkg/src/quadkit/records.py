"""Quadruple records: one JSON object per line.

Wire format, accepted and emitted unchanged by the CLI round trip:

    {"A": ["10", "0"], "B": ["16", "4"], "C": ["4", "6"], "D": ["0", "0"]}

Coordinates are scalar *strings* (decimal or p/q), never JSON numbers, so
exact rational values survive the text format.
"""

from __future__ import annotations

import json

from .geometry import Point2
from .identities import QuadConfig
from .scalar import EXACT, format_scalar, parse_scalar

LABELS = ("A", "B", "C", "D")


class RecordError(ValueError):
    """Structurally malformed quadruple record."""


def coordinate_strings(line: str) -> tuple[str, ...]:
    """The eight coordinate strings of a record, in A.x, A.y, ..., D.y
    order, after structural validation only (no scalar parsing)."""
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise RecordError(f"not a JSON record: {exc}") from None
    if not isinstance(obj, dict):
        raise RecordError("record is not a JSON object")
    extra = set(obj) - set(LABELS)
    if extra:
        raise RecordError(f"unexpected keys {sorted(extra)}")
    out = []
    for label in LABELS:
        if label not in obj:
            raise RecordError(f"missing point {label}")
        pair = obj[label]
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(coord, str) for coord in pair)
        ):
            raise RecordError(
                f"point {label} must be a two-element array of strings"
            )
        out.extend(pair)
    return tuple(out)


def parse_record(line: str, backend: str = EXACT) -> QuadConfig:
    """Parse one record line under the given backend.

    Raises RecordError for structural problems and ScalarParseError /
    ZeroDivisionError for bad coordinate text.
    """
    strings = coordinate_strings(line)
    values = [parse_scalar(text, backend) for text in strings]
    points = [
        Point2(values[i], values[i + 1]) for i in range(0, 8, 2)
    ]
    return QuadConfig(*points)


def format_record(q: QuadConfig) -> str:
    """Canonical record line for a quadruple (no trailing newline)."""
    obj = {
        label: [format_scalar(p.x), format_scalar(p.y)]
        for label, p in zip(LABELS, q.points())
    }
    return json.dumps(obj)
