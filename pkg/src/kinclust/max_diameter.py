"""Approximation algorithms minimizing the maximum cluster diameter.

The decision-style greedy ``gp`` grows a cluster around the current
bottom-leftmost trajectory out of everything within pairwise diameter D,
and recurses on the rest.  ``bsearch`` wraps it in an approximate binary
search over D.  ``kcenter_gonzalez`` instead reduces to metric k-center
(the pairwise span area is a metric) with farthest-point seeding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .geometry import (
    Clustering,
    ScalarLike,
    TrajectorySet,
    as_scalar,
    diameter,
    normalize_clustering,
    pairwise_diameter,
)

# Exact rational upper bound on the growth constant (4 + sqrt(2)) / 2 that
# caps the diameter of every cluster built by gp at GP_FACTOR * D.
GP_FACTOR = Fraction("2.7072")


def md_value(S: TrajectorySet, clustering: Iterable[Iterable[int]]) -> Fraction:
    """Largest cluster diameter in the clustering."""
    return max((diameter(S, C) for C in clustering), default=Fraction(0))


@dataclass(frozen=True)
class CenterSet:
    """Chosen center indices plus the induced nearest-center assignment."""

    centers: tuple[int, ...]
    assignment: tuple[int, ...]


@dataclass(frozen=True)
class MdSolution:
    """Result of a maximum-diameter solver."""

    clustering: Clustering
    value: Fraction
    method: str
    witnesses: tuple[int, ...] | None = None
    interval: tuple[Fraction, Fraction] | None = None
    delta: Fraction | None = None
    iterations: int | None = None
    chain: tuple[frozenset, ...] | None = None
    feasible: bool = True


def gp(S: TrajectorySet, D: ScalarLike) -> Clustering:
    """Greedy partition with pairwise-diameter threshold D.

    Repeatedly take the bottom-leftmost remaining trajectory s and make a
    cluster of every remaining s' with pairwise diameter at most D (s
    itself included, its self-distance being zero).  Clusters come out in
    the order their representatives were picked.
    """
    D = as_scalar(D)
    if D < 0:
        raise ValueError(f"threshold D must be nonnegative, got {D}")
    n = len(S)
    order = sorted(range(n), key=lambda i: S[i])
    taken = [False] * n
    clusters = []
    for s in order:
        if taken[s]:
            continue
        members = [
            j for j in order if not taken[j] and pairwise_diameter(S[s], S[j]) <= D
        ]
        for j in members:
            taken[j] = True
        clusters.append(frozenset(members))
    return tuple(clusters)


def _representatives(S: TrajectorySet, clustering: Clustering) -> tuple[int, ...]:
    return tuple(min(C, key=lambda i: S[i]) for C in clustering)


def bsearch(S: TrajectorySet, k: int, eps: ScalarLike = Fraction(1, 20)) -> MdSolution:
    """Approximate binary search over the gp threshold.

    Halves [0, diameter(S)] until the interval is shorter than
    delta = eps * (minimum pairwise diameter) / GP_FACTOR, keeping the
    invariant that gp at b needs at most k clusters.  The result is within
    a factor GP_FACTOR + eps of the best possible maximum diameter.  All
    arithmetic stays rational, so the loop guard is an exact comparison.
    """
    eps = as_scalar(eps)
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    n = len(S)
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if k >= n:
        singletons = normalize_clustering([frozenset([i]) for i in range(n)])
        return MdSolution(
            singletons,
            Fraction(0),
            "bsearch",
            witnesses=tuple(range(n)),
            interval=(Fraction(0), Fraction(0)),
            delta=None,
            iterations=0,
        )

    min_pair = min(
        pairwise_diameter(S[i], S[j]) for i in range(n) for j in range(i + 1, n)
    )
    delta = eps * min_pair / GP_FACTOR
    a = Fraction(0)
    b = diameter(S, S.all_indices())
    clusters: Clustering | None = None
    iterations = 0
    while b - a > delta:
        D = (a + b) / 2
        clusters = gp(S, D)
        iterations += 1
        if len(clusters) > k:
            a = D
        else:
            b = D
    if clusters is None or len(clusters) > k:
        clusters = gp(S, b)
    clustering = normalize_clustering(clusters)
    return MdSolution(
        clustering,
        md_value(S, clustering),
        "bsearch",
        witnesses=_representatives(S, clustering),
        interval=(a, b),
        delta=delta,
        iterations=iterations,
    )


def kcenter_gonzalez(S: TrajectorySet, k: int) -> tuple[CenterSet, Clustering]:
    """Farthest-point k-center under the pairwise-diameter metric.

    Seeded at the bottom-leftmost trajectory for determinism; each next
    center maximizes the distance to the chosen ones (ties to the lowest
    index).  Every trajectory is then assigned to its nearest center,
    again with ties to the lowest center index, so the induced clusters
    are disjoint.
    """
    n = len(S)
    if not 1 <= k <= n:
        raise ValueError(f"k must satisfy 1 <= k <= {n}, got {k}")

    seed = min(range(n), key=lambda i: S[i])
    centers = [seed]
    nearest = [pairwise_diameter(S[seed], S[i]) for i in range(n)]
    while len(centers) < k:
        far = max(range(n), key=lambda i: (nearest[i], -i))
        centers.append(far)
        for i in range(n):
            d = pairwise_diameter(S[far], S[i])
            if d < nearest[i]:
                nearest[i] = d

    assignment = []
    for i in range(n):
        assignment.append(min(centers, key=lambda c: (pairwise_diameter(S[c], S[i]), c)))
    groups: dict[int, set[int]] = {c: set() for c in centers}
    for i, c in enumerate(assignment):
        groups[c].add(i)
    clustering = normalize_clustering(groups.values())
    return CenterSet(tuple(centers), tuple(assignment)), clustering
