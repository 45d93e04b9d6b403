"""Brute-force referees for the solvers.

Exhaustive enumeration of set partitions (restricted growth strings),
optima over all or only well-separated clusterings, Stirling counting
checks, and a numeric Riemann cross-check of the exact span area.
Diameters come straight from the core geometry; nothing here reuses
solver logic.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator

from .arrangement import compute_holes, is_well_separated
from .geometry import TrajectorySet, canonical_key, _diameter_cached
from .max_diameter import MdSolution
from .sum_diameter import SdSolution

_ZERO = Fraction(0)

# Bell(12) is about 4.2 million, the ceiling for desk-scale exhaustion.
MAX_BRUTE_N = 12

PartitionStream = Iterator


def enumerate_partitions(n: int, k: int) -> PartitionStream:
    """All partitions of {0..n-1} into at most k nonempty blocks, each once.

    Blocks are emitted as sorted tuples ordered by their smallest element
    (the natural order of restricted growth strings).
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    if n > MAX_BRUTE_N:
        raise ValueError(f"refusing exhaustive enumeration for n={n} > {MAX_BRUTE_N}")

    labels = [0] * n

    def rec(i: int, used: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if i == n:
            blocks: list[list[int]] = [[] for _ in range(used)]
            for idx, lab in enumerate(labels):
                blocks[lab].append(idx)
            yield tuple(tuple(b) for b in blocks)
            return
        for lab in range(min(used + 1, k)):
            labels[i] = lab
            yield from rec(i + 1, max(used, lab + 1))

    return rec(0, 0)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind via the alternating-sum formula."""
    if k < 0 or n < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if n == k == 0:
        return 1
    total = sum((-1) ** (k - i) * math.comb(k, i) * i**n for i in range(k + 1))
    assert total % math.factorial(k) == 0
    return total // math.factorial(k)


def _scan(S: TrajectorySet, k: int, wellsep_only: bool):
    """Yield (clustering, sd, md) over partitions, optionally filtered."""
    n = len(S)
    if not 1 <= k <= n:
        raise ValueError(f"k must satisfy 1 <= k <= {n}, got {k}")
    holes = compute_holes(S) if wellsep_only else None
    for blocks in enumerate_partitions(n, k):
        clusters = tuple(frozenset(b) for b in blocks)
        if wellsep_only and not is_well_separated(S, clusters, holes):
            continue
        # blocks come from our own enumerator, so skip index validation
        diams = [_diameter_cached(S, c) if len(c) > 1 else _ZERO for c in clusters]
        yield clusters, sum(diams, _ZERO), max(diams)


def _best(candidates, value_index: int):
    best_value = None
    best_key = None
    best_clusters = None
    for clusters, sd, md in candidates:
        value = (sd, md)[value_index]
        if best_value is None or value < best_value:
            best_value, best_key, best_clusters = value, None, clusters
        elif value == best_value:
            # ties are rare; compute canonical keys lazily
            if best_key is None:
                best_key = canonical_key(best_clusters)
            key = canonical_key(clusters)
            if key < best_key:
                best_key, best_clusters = key, clusters
    if best_value is None:
        return None
    return (best_value, best_key), best_clusters


def brute_opt_sd(S: TrajectorySet, k: int) -> SdSolution:
    """Exact optimum of the diameter sum over all partitions into <= k blocks."""
    (value, _), clusters = _best(_scan(S, k, wellsep_only=False), 0)
    return SdSolution(clusters, value, "brute")


def brute_opt_md(S: TrajectorySet, k: int) -> MdSolution:
    """Exact optimum of the maximum diameter over all partitions into <= k blocks."""
    (value, _), clusters = _best(_scan(S, k, wellsep_only=False), 1)
    return MdSolution(clusters, value, "brute")


def brute_opt_wellsep(S: TrajectorySet, k: int, objective: str):
    """Exact optimum over well-separated partitions into <= k blocks only."""
    if objective not in ("sd", "md"):
        raise ValueError(f"objective must be 'sd' or 'md', got {objective!r}")
    index = 0 if objective == "sd" else 1
    best = _best(_scan(S, k, wellsep_only=True), index)
    if best is None:  # cannot happen: {S} alone is always well separated
        cls = SdSolution if objective == "sd" else MdSolution
        return cls((), Fraction(0), "wellsep-brute", feasible=False)
    (value, _), clusters = best
    cls = SdSolution if objective == "sd" else MdSolution
    return cls(clusters, value, "wellsep-brute")


def numeric_diameter(S: TrajectorySet, C, steps: int) -> Fraction:
    """Midpoint-rule Riemann sum of the cluster width, in exact rationals.

    Width is evaluated directly as max minus min of member positions, so
    this cross-check shares no code with the envelope-based area.
    """
    if steps < 1:
        raise ValueError(f"steps must be at least 1, got {steps}")
    members = sorted(frozenset(C))
    if len(members) <= 1:
        return Fraction(0)
    endpoints = [(S[i].x0, S[i].velocity) for i in members]
    total = Fraction(0)
    for i in range(steps):
        t = Fraction(2 * i + 1, 2 * steps)
        positions = [x0 + v * t for x0, v in endpoints]
        total += max(positions) - min(positions)
    return total / steps
