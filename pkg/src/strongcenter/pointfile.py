"""The point-file format: a ``d n`` header, then n rows of d coordinates.

Integer-looking tokens parse to exact ints, everything else to floats. Raw
row text is retained so reports can echo coordinates as they were typed.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import ParseError
from .geometry import Point

_INT_TOKEN = re.compile(r"[+-]?\d+\Z")


@dataclass(frozen=True)
class PointFile:
    """Parsed point file: dimension, points, and the original row text."""

    dim: int
    points: tuple
    rows: tuple


def parse_number(token: str):
    """One coordinate token: an exact int when it looks like one, else a
    finite float."""
    if _INT_TOKEN.match(token):
        return int(token)
    try:
        value = float(token)
    except ValueError:
        raise ParseError(f"bad coordinate {token!r}") from None
    if not math.isfinite(value):
        raise ParseError(f"non-finite coordinate {token!r}")
    return value


def format_number(value) -> str:
    """Shortest text that parses back to the same value."""
    return repr(value) if isinstance(value, float) else str(value)


def parse_point_file(text: str) -> PointFile:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty point file")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError("header must be 'd n'")
    try:
        dim, n = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("header must hold two integers") from None
    if dim < 1:
        raise ParseError("dimension must be positive")
    if n < 1:
        raise ParseError("point count must be positive")
    if len(lines) - 1 != n:
        raise ParseError(
            f"header promises {n} points, file has {len(lines) - 1} rows"
        )
    points = []
    rows = []
    for line_no, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != dim:
            raise ParseError(
                f"line {line_no}: expected {dim} coordinates, got "
                f"{len(parts)}"
            )
        points.append(Point(tuple(parse_number(token) for token in parts)))
        rows.append(line.strip())
    return PointFile(dim, tuple(points), tuple(rows))


def format_points(points) -> str:
    """Render points in the file format, with canonical single-space rows."""
    points = list(points)
    if not points:
        raise ValueError("no points to format")
    dim = points[0].dim
    lines = [f"{dim} {len(points)}"]
    lines.extend(
        " ".join(format_number(c) for c in p.coords) for p in points
    )
    return "\n".join(lines) + "\n"
