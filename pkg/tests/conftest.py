"""Shared instances and helpers for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from kinclust import GeneratorConfig, TrajectorySet, generate_instance

# Rational upper bounds for the irrational constants used in bound checks.
SQRT2_UPPER = Fraction("1.4142135624")
BALL_FACTOR = 2 + SQRT2_UPPER            # >= 2 + sqrt(2)
GP_BOUND = Fraction("2.7072")            # >= (4 + sqrt(2)) / 2
KCENTER_BOUND = Fraction("6.8285")       # >= 2 * (2 + sqrt(2))


def make_instance(seed: int, n: int, grid: int = 10) -> TrajectorySet:
    """Seeded random instance on the default grid."""
    return generate_instance(GeneratorConfig(seed=seed, n=n, grid=grid))


def random_fraction(rng: random.Random, lo: int, hi: int, den: int = 10) -> Fraction:
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_trajectory(rng: random.Random, span: int = 10, den: int = 10):
    from kinclust import Trajectory

    x0 = random_fraction(rng, 0, span, den)
    v = random_fraction(rng, -span // 2, span // 2, den)
    return Trajectory(x0, x0 + v)


# The four-trajectory instance whose unique optimal 2-clustering for the
# max-diameter objective pairs the interleaved wedges {0,2} and {1,3}; no
# hole-guided split sequence can produce it.  Uses a 10-digit rational
# stand-in for sqrt(2).
INTERLEAVED_QUARTET = (
    ("-2.4142135624", "1"),
    ("-0.9", "2"),
    ("0", "0"),
    ("0.1", "-0.4142135624"),
)


@pytest.fixture(scope="session")
def quartet() -> TrajectorySet:
    return TrajectorySet.from_pairs(INTERLEAVED_QUARTET)


@pytest.fixture(scope="session")
def two_verticals() -> TrajectorySet:
    return TrajectorySet.from_pairs([("0", "0"), ("1", "1")])


@pytest.fixture(scope="session")
def three_lines() -> TrajectorySet:
    # Two crossing diagonals and one slow vertical: crossings at t = 1/10,
    # 1/2, 9/10, giving seven holes.
    return TrajectorySet.from_pairs([("0", "2"), ("2", "0"), ("0.2", "0.2")])
