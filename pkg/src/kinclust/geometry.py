"""Exact geometry for points moving on a line during the unit time interval.

A moving point is stored as the pair of its positions at t=0 and t=1; its
trajectory is the straight segment joining those two points in the (x, t)
plane.  All coordinates are ``fractions.Fraction``, so every predicate
(ordering, crossing) and every measure (span area) the clustering code
relies on is computed exactly and reproducibly.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Literal, Union

Scalar = Fraction
ScalarLike = Union[Fraction, int, str]
Side = Literal["left", "right"]

# A cluster is a frozenset of trajectory indices; a clustering is a tuple of
# pairwise-disjoint clusters covering all indices.
Cluster = frozenset
Clustering = tuple

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_scalar(value: ScalarLike) -> Fraction:
    """Coerce an int, str, or Fraction to an exact Fraction.

    Strings may be decimal literals ("0.25", "-1.5e-2") or ratios ("3/4");
    both parse exactly.  Floats are rejected on purpose: converting one
    would bake binary rounding error into an otherwise exact pipeline.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected Fraction, int, or str, got {type(value).__name__}")


@dataclass(frozen=True, order=True)
class Trajectory:
    """One moving point: its positions at t=0 and t=1; velocity is derived.

    Ordering compares (x0, x1) lexicographically, which is exactly the
    bottom-leftmost order used by the solvers.
    """

    x0: Fraction
    x1: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x0", as_scalar(self.x0))
        object.__setattr__(self, "x1", as_scalar(self.x1))

    @property
    def velocity(self) -> Fraction:
        return self.x1 - self.x0

    def position(self, t: ScalarLike) -> Fraction:
        """Position at time ``t``; only 0 <= t <= 1 is meaningful."""
        t = as_scalar(t)
        if not _ZERO <= t <= _ONE:
            raise ValueError(f"time {t} outside [0, 1]")
        return self.x0 + (self.x1 - self.x0) * t

    def midpoint(self) -> Fraction:
        """Position at t = 1/2, i.e. the average of the two endpoints."""
        return (self.x0 + self.x1) / 2

    def __repr__(self) -> str:  # compact: Trajectory(0 -> 2)
        return f"Trajectory({self.x0} -> {self.x1})"


@dataclass(frozen=True)
class TrajectorySet:
    """Ordered, duplicate-free collection of trajectories with stable indices."""

    trajectories: tuple[Trajectory, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "trajectories", tuple(self.trajectories))
        seen: dict[Trajectory, int] = {}
        for i, s in enumerate(self.trajectories):
            if s in seen:
                raise ValueError(f"duplicate trajectory at indices {seen[s]} and {i}: {s}")
            seen[s] = i

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[ScalarLike, ScalarLike]]) -> "TrajectorySet":
        return cls(tuple(Trajectory(x0, x1) for x0, x1 in pairs))

    def __len__(self) -> int:
        return len(self.trajectories)

    def __getitem__(self, index: int) -> Trajectory:
        return self.trajectories[index]

    def __iter__(self) -> Iterator[Trajectory]:
        return iter(self.trajectories)

    def all_indices(self) -> frozenset:
        return frozenset(range(len(self.trajectories)))


def as_cluster(indices: Iterable[int], n: int | None = None) -> frozenset:
    """Validate a collection of trajectory indices and freeze it."""
    cluster = frozenset(indices)
    for i in cluster:
        if not isinstance(i, int) or isinstance(i, bool):
            raise ValueError(f"cluster member {i!r} is not an integer index")
        if i < 0 or (n is not None and i >= n):
            raise ValueError(f"cluster index {i} out of range")
    return cluster


def canonical_key(clustering: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    """Order-free key for a clustering: sorted tuple of sorted clusters."""
    return tuple(sorted(tuple(sorted(c)) for c in clustering))


def normalize_clustering(clusters: Iterable[Iterable[int]]) -> Clustering:
    """Drop empty clusters and put the rest in canonical order."""
    live = [frozenset(c) for c in clusters if c]
    live.sort(key=lambda c: tuple(sorted(c)))
    return tuple(live)


def check_clustering(S: TrajectorySet, clustering: Iterable[Iterable[int]]) -> Clustering:
    """Validate that ``clustering`` partitions the index set of ``S``."""
    clusters = tuple(as_cluster(c, len(S)) for c in clustering)
    total = 0
    union: set[int] = set()
    for c in clusters:
        total += len(c)
        union |= c
    if total != len(union) or union != set(range(len(S))):
        raise ValueError("clusters must be disjoint and cover every trajectory index")
    return clusters


def crossing_time(a: Trajectory, b: Trajectory) -> Fraction | None:
    """Time at which two trajectories meet, or None for parallel ones.

    The returned value may fall outside [0, 1]; callers filter.
    """
    d0 = a.x0 - b.x0
    d1 = a.x1 - b.x1
    if d0 == d1:
        return None
    return d0 / (d0 - d1)


def pairwise_diameter(a: Trajectory, b: Trajectory) -> Fraction:
    """Area of the span of two trajectories: the time integral of their distance.

    Closed form: with d(t) the signed difference of positions, the integral of
    |d| over [0,1] is |d(0)+d(1)|/2 when d keeps its sign, and otherwise the
    two triangles on either side of the crossing.
    """
    d0 = a.x0 - b.x0
    d1 = a.x1 - b.x1
    if d0 * d1 >= 0:
        return abs(d0 + d1) / 2
    t = d0 / (d0 - d1)
    return (abs(d0) * t + abs(d1) * (1 - t)) / 2


def bottom_leftmost(S: TrajectorySet, C: Iterable[int]) -> Trajectory:
    """Member with minimum position at t=0, ties broken by position at t=1."""
    return S[bottom_leftmost_index(S, C)]


def bottom_leftmost_index(S: TrajectorySet, C: Iterable[int]) -> int:
    cluster = as_cluster(C, len(S))
    if not cluster:
        raise ValueError("bottom_leftmost of an empty cluster")
    return min(cluster, key=lambda i: S[i])


@dataclass(frozen=True)
class Envelope:
    """Piecewise-linear boundary of a span: breakpoints (t, x), t increasing 0..1."""

    breakpoints: tuple[tuple[Fraction, Fraction], ...]

    def times(self) -> tuple[Fraction, ...]:
        return tuple(t for t, _ in self.breakpoints)

    def value(self, t: ScalarLike) -> Fraction:
        t = as_scalar(t)
        if not _ZERO <= t <= _ONE:
            raise ValueError(f"time {t} outside [0, 1]")
        times = [bp[0] for bp in self.breakpoints]
        i = bisect.bisect_right(times, t) - 1
        if i >= len(self.breakpoints) - 1:
            return self.breakpoints[-1][1]
        t0, x0 = self.breakpoints[i]
        t1, x1 = self.breakpoints[i + 1]
        return x0 + (x1 - x0) * (t - t0) / (t1 - t0)


def envelope(S: TrajectorySet, C: Iterable[int], side: Side) -> Envelope:
    """Left (pointwise min) or right (pointwise max) side of the cluster's span.

    Breakpoints appear only where the boundary switches between member
    trajectories; switching members cross at the breakpoint, so consecutive
    pieces always have distinct slopes.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    members = sorted(as_cluster(C, len(S)))
    if not members:
        raise ValueError("envelope of an empty cluster")
    if len(members) == 1:
        s = S[members[0]]
        return Envelope(((_ZERO, s.x0), (_ONE, s.x1)))

    cuts = {_ZERO, _ONE}
    for ai in range(len(members)):
        for bi in range(ai + 1, len(members)):
            t = crossing_time(S[members[ai]], S[members[bi]])
            if t is not None and _ZERO < t < _ONE:
                cuts.add(t)
    grid = sorted(cuts)

    pick = min if side == "left" else max

    def boundary(t: Fraction) -> Fraction:
        return pick(S[i].x0 + S[i].velocity * t for i in members)

    # Within each open slab the boundary is carried by a single member
    # (crossings only happen at the cuts), identified at the slab midpoint.
    actives = []
    for lo, hi in zip(grid, grid[1:]):
        mid = (lo + hi) / 2
        actives.append(pick(members, key=lambda i: S[i].x0 + S[i].velocity * mid))

    points = [(grid[0], boundary(grid[0]))]
    for k in range(1, len(actives)):
        if actives[k] != actives[k - 1]:
            points.append((grid[k], boundary(grid[k])))
    points.append((grid[-1], boundary(grid[-1])))
    return Envelope(tuple(points))


def diameter(S: TrajectorySet, C: Iterable[int]) -> Fraction:
    """Area of the cluster's span: the integral over [0,1] of its width.

    Zero for empty and singleton clusters; otherwise an exact sum of
    trapezoids over the pairwise crossing-time grid, which refines the
    merged breakpoints of the two envelopes.
    """
    members = as_cluster(C, len(S))
    if len(members) <= 1:
        return _ZERO
    return _diameter_cached(S, members)


@lru_cache(maxsize=262144)
def _diameter_cached(S: TrajectorySet, members: frozenset) -> Fraction:
    # The width (right minus left envelope) is linear between consecutive
    # pairwise crossing times, so trapezoids over that grid integrate it
    # exactly; the grid refines the merged envelope breakpoints.
    lines = [(S[i].x0, S[i].velocity) for i in sorted(members)]
    cuts = {_ZERO, _ONE}
    for a in range(len(lines)):
        x0a, va = lines[a]
        for b in range(a + 1, len(lines)):
            x0b, vb = lines[b]
            if va != vb:
                t = (x0b - x0a) / (va - vb)
                if _ZERO < t < _ONE:
                    cuts.add(t)
    grid = sorted(cuts)

    def width(t: Fraction) -> Fraction:
        positions = [x0 + v * t for x0, v in lines]
        return max(positions) - min(positions)

    total = _ZERO
    prev_t = grid[0]
    prev_w = width(prev_t)
    for t in grid[1:]:
        w = width(t)
        total += (prev_w + w) * (t - prev_t) / 2
        prev_t, prev_w = t, w
    return total
