"""Strong centerpoints for abstract set systems with bounded intersection.

A system of order k promises that any k of its sets meet in at most one
element unless that intersection already equals the intersection of fewer
of them. The solver recurses on the largest heavy set, lowering the order
by one per level; the pairwise (order 2) base intersects all heavy sets
directly and reports an explicit witness when no common element survives.
The brute-force oracle intersects heavy sets with no recursion at all and
stays the independent route for tests.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    BoundedIntersectionError,
    DimensionMismatchError,
    ParseError,
    check_size_guard,
)
from .geometry import Point, heavy_threshold_exceeded

BRUTE_FORCE_DEFAULT_BUDGET = 20_000_000

_INCIDENCE_TOL = 1e-9


@dataclass(frozen=True)
class SetSystem:
    """Ground set 0..n-1 with distinct nonempty subsets and the order k.

    Sets are tuples of strictly ascending element ids. Use
    :meth:`from_sets` to canonicalize arbitrary iterables.
    """

    n: int
    sets: tuple
    k: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"ground size must be a positive int, got {self.n!r}")
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 2:
            raise ValueError(f"order k must be an int >= 2, got {self.k!r}")
        sets = tuple(tuple(s) for s in self.sets)
        object.__setattr__(self, "sets", sets)
        seen = set()
        for index, s in enumerate(sets):
            if not s:
                raise ValueError(f"set {index} is empty")
            previous = -1
            for element in s:
                if isinstance(element, bool) or not isinstance(element, int):
                    raise TypeError(
                        f"set {index} holds non-int element {element!r}"
                    )
                if element <= previous:
                    raise ValueError(
                        f"set {index} is not strictly ascending"
                    )
                previous = element
            if s[-1] >= self.n:
                raise ValueError(
                    f"set {index} references element {s[-1]} outside "
                    f"0..{self.n - 1}"
                )
            if s in seen:
                raise ValueError(f"set {index} duplicates an earlier set")
            seen.add(s)

    @classmethod
    def from_sets(cls, n: int, sets, k: int) -> "SetSystem":
        """Build a system from arbitrary iterables: members are sorted and
        deduplicated, empty sets and repeated sets are dropped."""
        canonical = []
        seen = set()
        for s in sets:
            t = tuple(sorted(set(s)))
            if t and t not in seen:
                seen.add(t)
                canonical.append(t)
        return cls(n, tuple(canonical), k)


@dataclass(frozen=True)
class AbstractResult:
    """Solver outcome: an element of every heavy set, or a witness there is none.

    ``element`` is the found ground id, or None. On failure ``witness``
    lists heavy set indices whose common intersection is empty, indexed in
    the system at the recursion level where the search failed. ``trace``
    records one (ground size, chosen set index) pair per level; the chosen
    index is None at the base level.
    """

    element: Optional[int]
    witness: Optional[tuple]
    trace: tuple

    @property
    def found(self) -> bool:
        return self.element is not None


def _heavy_indices(system: SetSystem) -> list[int]:
    return [
        i
        for i, s in enumerate(system.sets)
        if heavy_threshold_exceeded(len(s), system.n, system.k)
    ]


def strong_centerpoint_pairwise(system: SetSystem) -> AbstractResult:
    """Solve an order-2 system by intersecting all of its heavy sets.

    Heavy sets pairwise share at most one element unless one contains the
    other (the nested escape is what restriction from higher orders can
    produce); a heavy pair sharing two or more elements without nesting is
    a property violation and raises. With no heavy set, element 0 wins
    vacuously. An empty common intersection is a genuine no-centerpoint
    outcome, witnessed by the heavy set indices.
    """
    if system.k != 2:
        raise ValueError(f"pairwise solver needs order 2, got {system.k}")
    heavy = _heavy_indices(system)
    trace = ((system.n, None),)
    if not heavy:
        return AbstractResult(0, None, trace)
    members = [frozenset(system.sets[i]) for i in heavy]
    for a in range(len(members)):
        for b in range(a + 1, len(members)):
            shared = members[a] & members[b]
            if len(shared) > 1 and not (
                members[a] <= members[b] or members[b] <= members[a]
            ):
                raise BoundedIntersectionError(
                    f"heavy sets {heavy[a]} and {heavy[b]} share "
                    f"{len(shared)} elements"
                )
    common = frozenset.intersection(*members)
    if common:
        return AbstractResult(min(common), None, trace)
    return AbstractResult(None, tuple(heavy), trace)


def restrict(system: SetSystem, set_index: int) -> tuple[SetSystem, tuple]:
    """Restrict the system to one of its sets, lowering the order by one.

    Returns ``(restricted, back_ids)``: ground elements of the chosen set
    are re-indexed by ascending original id and ``back_ids`` maps them
    home. Every set contributes its intersection with the chosen set;
    empty intersections drop and duplicates merge, first occurrence first.
    The chosen set itself survives as the full restricted ground set.
    Requires order at least 3.
    """
    if not 0 <= set_index < len(system.sets):
        raise ValueError(f"set index {set_index} out of range")
    if system.k < 3:
        raise ValueError("cannot lower the order below 2")
    base = system.sets[set_index]
    forward = {element: i for i, element in enumerate(base)}
    new_sets = []
    seen = set()
    for s in system.sets:
        t = tuple(forward[e] for e in s if e in forward)
        if t and t not in seen:
            seen.add(t)
            new_sets.append(t)
    restricted = SetSystem(len(base), tuple(new_sets), system.k - 1)
    return restricted, base


def strong_centerpoint(system: SetSystem) -> AbstractResult:
    """Find an element contained in every heavy set of the system.

    Recurses on the largest heavy set (ties to the lowest index) at order
    k - 1 down to the pairwise base. The restriction of the chosen set to
    itself is always heavy in the restricted system, so a deeper success
    maps home through the recorded ground ids. A no-centerpoint outcome
    propagates with its witness left in the failing level's indexing.
    """
    if system.k == 2:
        return strong_centerpoint_pairwise(system)
    heavy = _heavy_indices(system)
    if not heavy:
        return AbstractResult(0, None, ((system.n, None),))
    chosen = max(heavy, key=lambda i: (len(system.sets[i]), -i))
    restricted, back_ids = restrict(system, chosen)
    inner = strong_centerpoint(restricted)
    trace = ((system.n, chosen),) + inner.trace
    if inner.element is None:
        return AbstractResult(None, inner.witness, trace)
    return AbstractResult(back_ids[inner.element], None, trace)


def brute_force_strong_centerpoints(
    system: SetSystem, budget: Optional[int] = None
) -> list[int]:
    """All elements contained in every heavy set, ascending; [] means none.

    With no heavy set every element qualifies. Independent of the
    recursive solver by construction: one pass over set sizes, one
    intersection, no restriction.
    """
    cost = system.n * max(1, len(system.sets))
    check_size_guard(
        cost, BRUTE_FORCE_DEFAULT_BUDGET if budget is None else budget
    )
    heavy = _heavy_indices(system)
    if not heavy:
        return list(range(system.n))
    common = frozenset.intersection(
        *(frozenset(system.sets[i]) for i in heavy)
    )
    return sorted(common)


def check_bounded_intersection(
    system: SetSystem, budget: Optional[int] = None
) -> Optional[tuple]:
    """First k-tuple of set indices violating bounded intersection, or None.

    A k-tuple passes when its common intersection has at most one element
    or equals the intersection of some proper sub-tuple of two or more of
    its sets; a single set is not an escape, so at order 2 any pair
    sharing two elements violates, nested or not. Cost grows as
    C(|sets|, k) * k * n; guarded. Fewer than k sets pass vacuously.
    """
    m = len(system.sets)
    k = system.k
    if m < k:
        return None
    cost = math.comb(m, k) * k * max(1, system.n)
    check_size_guard(
        cost, BRUTE_FORCE_DEFAULT_BUDGET if budget is None else budget
    )
    members = [frozenset(s) for s in system.sets]
    for combo in itertools.combinations(range(m), k):
        common = members[combo[0]]
        for i in combo[1:]:
            common = common & members[i]
            if len(common) <= 1:
                break
        if len(common) <= 1:
            continue
        if k == 2:
            return combo  # no sub-tuple of >= 2 sets exists to escape to
        # equality with a sub-tuple of >= 2 sets implies equality with a
        # leave-one-out intersection containing it, so checking those k
        # (k-1)-tuples suffices
        acceptable = False
        for skip in range(k):
            sub = None
            for position, i in enumerate(combo):
                if position == skip:
                    continue
                sub = members[i] if sub is None else sub & members[i]
            if sub == common:
                acceptable = True
                break
        if not acceptable:
            return combo
    return None


def _subtract(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _all_int(*vectors) -> bool:
    return all(
        isinstance(x, int) and not isinstance(x, bool)
        for v in vectors
        for x in v
    )


def _norm1(v) -> float:
    return float(sum(abs(x) for x in v))


def _collinear2(a, b, t) -> bool:
    u = _subtract(b, a)
    v = _subtract(t, a)
    cross = u[0] * v[1] - u[1] * v[0]
    if _all_int(u, v):
        return cross == 0
    return abs(cross) <= _INCIDENCE_TOL * max(_norm1(u) * _norm1(v), 1.0)


def _cross3(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _collinear3(a, b, t) -> bool:
    u = _subtract(b, a)
    v = _subtract(t, a)
    cross = _cross3(u, v)
    if _all_int(u, v):
        return not any(cross)
    return _norm1(cross) <= _INCIDENCE_TOL * max(_norm1(u) * _norm1(v), 1.0)


def _plane_normal(a, b, c):
    """Normal of the plane through three locations, or None if collinear."""
    u = _subtract(b, a)
    v = _subtract(c, a)
    normal = _cross3(u, v)
    if _all_int(u, v):
        return normal if any(normal) else None
    if _norm1(normal) <= _INCIDENCE_TOL * max(_norm1(u) * _norm1(v), 1.0):
        return None
    return normal


def _on_plane(anchor, normal, t) -> bool:
    v = _subtract(t, anchor)
    dot = sum(nc * vc for nc, vc in zip(normal, v))
    if _all_int(normal, v):
        return dot == 0
    return abs(dot) <= _INCIDENCE_TOL * max(_norm1(normal) * _norm1(v), 1.0)


def _degenerate_flats(coords, dim: int) -> list[frozenset]:
    """Maximal candidate flats when no subset can span a hyperplane."""
    n = len(coords)
    groups: dict = {}
    for t, c in enumerate(coords):
        groups.setdefault(c, []).append(t)
    flats = [frozenset(g) for g in groups.values()]
    if dim == 3:
        for i, j in itertools.combinations(range(n), 2):
            if coords[i] == coords[j]:
                continue
            flats.append(
                frozenset(
                    t
                    for t in range(n)
                    if _collinear3(coords[i], coords[j], coords[t])
                )
            )
    return flats


def hyperplane_system(
    points: Sequence[Point], dim: int, budget: Optional[int] = None
) -> SetSystem:
    """Incidence system of the hyperplanes spanned by a point set.

    Each hyperplane through ``dim`` affinely independent points contributes
    the set of all point indices incident to it; the system's order is
    ``dim``, matching how many such sets can share more than one point
    without sharing their whole flat. When n <= dim nothing spans, so
    maximal degenerate flats (coincident groups, collinear groups in
    dimension 3) stand in. Incidence is exact for integer coordinates and
    tolerance-based (1e-9, relative) for floats.
    """
    if dim not in (2, 3):
        raise ValueError(f"supported dimensions are 2 and 3, got {dim!r}")
    pts = list(points)
    n = len(pts)
    if n == 0:
        raise ValueError("empty point set")
    for index, p in enumerate(pts):
        if not isinstance(p, Point):
            raise TypeError(f"points[{index}] is not a Point")
        if p.dim != dim:
            raise DimensionMismatchError(
                f"points[{index}] has dimension {p.dim}, expected {dim}"
            )
    cost = (math.comb(n, dim) + n * n) * max(n, 1)
    check_size_guard(
        cost, BRUTE_FORCE_DEFAULT_BUDGET if budget is None else budget
    )
    coords = [p.coords for p in pts]
    found: set = set()
    if dim == 2:
        for i, j in itertools.combinations(range(n), 2):
            if coords[i] == coords[j]:
                continue
            found.add(
                frozenset(
                    t
                    for t in range(n)
                    if _collinear2(coords[i], coords[j], coords[t])
                )
            )
    else:
        for i, j, l in itertools.combinations(range(n), 3):
            normal = _plane_normal(coords[i], coords[j], coords[l])
            if normal is None:
                continue
            found.add(
                frozenset(
                    t
                    for t in range(n)
                    if _on_plane(coords[i], normal, coords[t])
                )
            )
    if n <= dim:
        candidates = found | set(_degenerate_flats(coords, dim))
        found = {
            s for s in candidates if not any(s < t for t in candidates)
        }
    sets = tuple(sorted(tuple(sorted(s)) for s in found))
    return SetSystem(n, sets, dim)


def format_set_system(system: SetSystem) -> str:
    """Text form: header ``n k``, then one set per line, ids ascending."""
    lines = [f"{system.n} {system.k}"]
    lines.extend(" ".join(str(e) for e in s) for s in system.sets)
    return "\n".join(lines) + "\n"


def parse_set_system(text: str) -> SetSystem:
    """Parse the text form of a set system; inverse of
    :func:`format_set_system` on canonical input."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty set-system file")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError("header must be 'n k'")
    try:
        n, k = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("header must hold two integers") from None
    sets = []
    for line_no, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if not parts:
            raise ParseError(f"line {line_no}: empty set")
        try:
            sets.append(tuple(int(part) for part in parts))
        except ValueError:
            raise ParseError(
                f"line {line_no}: element ids must be integers"
            ) from None
    try:
        return SetSystem(n, tuple(sets), k)
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from exc
