"""Strong centerpoints for polytope families with fixed facet orientations.

For each orientation the construction takes the minimal closed halfspace
containing a fixed fraction of the points; the intersection of those k
halfspaces always meets the point set, and any point of it lies inside
every family polytope containing more than (1 - 1/k) * n points. The
verifier and the enumeration oracle give two independent routes to the
same counts and must never be merged.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import DimensionMismatchError, check_size_guard
from .geometry import (
    Halfspace,
    Orientation,
    OrientationFamily,
    Point,
    heavy_threshold_exceeded,
    kth_smallest,
    project,
)

BRUTE_FORCE_DEFAULT_BUDGET = 20_000_000

# Dot products of int64 columns stay exact below this product bound.
_INT64_SAFE = 2**62


def selection_rank(n: int, k: int) -> int:
    """The projection order statistic defining each constructed halfspace.

    Equals floor((1 - 1/k) * n) + 1, written n - ceil(n/k) + 1 in integers.
    A halfspace cut at this rank can never lose its claim to more than
    (1 - 1/k) * n points, and its complement holds at most ceil(n/k) - 1.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be a positive int, got {n!r}")
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError(f"k must be a positive int, got {k!r}")
    return n - (n + k - 1) // k + 1


@dataclass(frozen=True)
class Verdict:
    """Outcome of a strong-centerpoint check.

    When ``ok`` is false, ``witness_orientation`` is the first family
    orientation whose strict-below count crosses the containment threshold,
    and ``witness_count`` is that count.
    """

    ok: bool
    witness_orientation: Optional[Orientation] = None
    witness_count: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class CenterpointCertificate:
    """Constructed halfspaces plus the membership evidence for the choice.

    halfspaces:     one minimal heavy halfspace per family orientation.
    region_members: indices of points inside all of them, ascending.
    chosen_index:   the lowest region member; the strong centerpoint.
    rank:           the 1-based order statistic defining each offset.
    point:          the chosen point itself.
    """

    halfspaces: tuple
    region_members: tuple
    chosen_index: int
    rank: int
    point: Point


class _Projector:
    """Per-orientation projections of one point set, vectorized.

    Columns stay int64 (exact) for integer instances inside overflow-safe
    bounds, drop to object dtype for oversized integers, and use float64
    otherwise. Accumulation is elementwise per axis so results are bitwise
    identical to :func:`project`, keeping certificate offsets and verifier
    counts agreed on exact ties.
    """

    def __init__(self, points: Sequence[Point], family: OrientationFamily):
        if len(points) == 0:
            raise ValueError("empty point set")
        dim = family.dim
        for idx, p in enumerate(points):
            if not isinstance(p, Point):
                raise TypeError(f"points[{idx}] is not a Point")
            if p.dim != dim:
                raise DimensionMismatchError(
                    f"points[{idx}] has dimension {p.dim}, family has {dim}"
                )
        self.family = family
        self.n = len(points)
        cols = [[p.coords[j] for p in points] for j in range(dim)]
        arrays = None
        if all(p.is_integral for p in points):
            coord_bound = max(max(abs(c) for c in col) for col in cols)
            dir_bound = max(
                (
                    abs(c)
                    for o in family
                    if o.is_integral
                    for c in o.direction
                ),
                default=0,
            )
            if (coord_bound + 1) * (dir_bound + 1) * dim < _INT64_SAFE:
                arrays = [np.asarray(col, dtype=np.int64) for col in cols]
        else:
            try:
                arrays = [np.asarray(col, dtype=np.float64) for col in cols]
            except OverflowError:
                arrays = None
        if arrays is None:
            arrays = [np.asarray(col, dtype=object) for col in cols]
        self._cols = arrays
        self._cache: dict[int, np.ndarray] = {}

    def along(self, index: int) -> np.ndarray:
        arr = self._cache.get(index)
        if arr is None:
            direction = self.family[index].direction
            arr = self._cols[0] * direction[0]
            for j in range(1, len(direction)):
                arr = arr + self._cols[j] * direction[j]
            self._cache[index] = arr
        return arr

    def count_below(self, index: int, value) -> int:
        arr = self.along(index)
        try:
            return int(np.count_nonzero(arr < value))
        except (OverflowError, TypeError):
            # value does not fit the column dtype; compare in Python
            return sum(1 for v in arr.tolist() if v < value)

    def members(self, offsets) -> list[int]:
        inside = np.ones(self.n, dtype=bool)
        for index, offset in enumerate(offsets):
            inside &= np.asarray(self.along(index) <= offset, dtype=bool)
        return [int(j) for j in np.flatnonzero(inside)]


def compute_strong_centerpoint(
    points: Sequence[Point], family: OrientationFamily
) -> CenterpointCertificate:
    """Construct a strong centerpoint of ``points`` for ``family``.

    Cuts each orientation at the rank given by :func:`selection_rank` and
    returns the lowest-index point inside all k halfspaces, which is
    guaranteed to exist. Expected O(k * n) time.
    """
    projector = _Projector(points, family)
    n = len(points)
    rank = selection_rank(n, family.k)
    offsets = [
        kth_smallest(projector.along(i).tolist(), rank)
        for i in range(family.k)
    ]
    members = projector.members(offsets)
    assert members, "halfspace intersection missed every point"
    halfspaces = tuple(
        Halfspace(family[i], offsets[i]) for i in range(family.k)
    )
    chosen = members[0]
    return CenterpointCertificate(
        halfspaces=halfspaces,
        region_members=tuple(members),
        chosen_index=chosen,
        rank=rank,
        point=points[chosen],
    )


def core_region(points: Sequence[Point], family: OrientationFamily) -> list[int]:
    """Indices of the points inside every constructed halfspace, ascending."""
    return list(compute_strong_centerpoint(points, family).region_members)


def verify_strong_centerpoint(
    points: Sequence[Point], family: OrientationFamily, candidate: Point
) -> Verdict:
    """Exact check that ``candidate`` is a strong centerpoint of ``points``.

    Equivalent formulation used here: no orientation may have strictly more
    than (1 - 1/k) * n points projecting strictly below the candidate,
    because the worst avoiding polytope along a direction is the open
    halfspace just under the candidate. O(k * n), no tolerances.
    """
    projector = _Projector(points, family)
    n = len(points)
    k = family.k
    for i in range(k):
        count = projector.count_below(i, project(candidate, family[i]))
        if heavy_threshold_exceeded(count, n, k):
            return Verdict(False, family[i], count)
    return Verdict(True)


def max_avoiding_count(
    points: Sequence[Point], family: OrientationFamily, candidate: Point
) -> tuple[int, Orientation]:
    """The largest |C ∩ P| over family polytopes C avoiding ``candidate``.

    Halfspaces of one orientation are nested, so the maximum is realized by
    a single halfspace cut just below the candidate along some orientation.
    Returns that count and the first orientation achieving it.
    """
    projector = _Projector(points, family)
    best = -1
    best_orientation = family[0]
    for i in range(family.k):
        count = projector.count_below(i, project(candidate, family[i]))
        if count > best:
            best = count
            best_orientation = family[i]
    return best, best_orientation


def brute_force_max_avoiding(
    points: Sequence[Point],
    family: OrientationFamily,
    candidate: Point,
    budget: Optional[int] = None,
) -> int:
    """Enumerate family polytopes over all candidate offsets; the maximum
    number of points in one avoiding ``candidate``.

    Independent oracle for :func:`max_avoiding_count`: it never uses the
    nesting argument, only raw enumeration over the offset grid built from
    the projection values of the points and the candidate, extended by a
    sentinel below and above. Exponential in k, guarded by cost estimate
    (n <= 12, k <= 3 stays comfortable).
    """
    n = len(points)
    k = family.k
    candidate_proj = [project(candidate, o) for o in family]
    projections = [[project(q, o) for q in points] for o in family]
    offset_grid = []
    for i in range(k):
        values = sorted(set(projections[i]) | {candidate_proj[i]})
        offset_grid.append([values[0] - 1] + values + [values[-1] + 1])
    cost = n * k
    for grid in offset_grid:
        cost *= len(grid)
    check_size_guard(
        cost, BRUTE_FORCE_DEFAULT_BUDGET if budget is None else budget
    )
    best = 0
    for offsets in itertools.product(*offset_grid):
        if all(candidate_proj[i] <= offsets[i] for i in range(k)):
            continue  # this polytope contains the candidate
        count = 0
        for j in range(n):
            for i in range(k):
                if projections[i][j] > offsets[i]:
                    break
            else:
                count += 1
        if count > best:
            best = count
    return best
