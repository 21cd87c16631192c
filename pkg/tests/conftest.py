"""Shared fixtures and generators for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from negbound import (
    DivisorClass,
    SurfaceModel,
    blow_up,
    hirzebruch,
    projective_plane,
    ruled_surface,
)


@pytest.fixture
def p2() -> SurfaceModel:
    return projective_plane()


def random_base(rng: random.Random) -> SurfaceModel:
    """A random built-in base surface."""
    choice = rng.randrange(3)
    if choice == 0:
        return projective_plane()
    if choice == 1:
        return hirzebruch(rng.randrange(0, 4))
    genus = rng.randrange(1, 4)
    twist = (3 - 3 * genus) - rng.randrange(1, 5)
    return ruled_surface(genus, twist)


def random_model(rng: random.Random, max_blowups: int = 6) -> SurfaceModel:
    surface = random_base(rng)
    k = rng.randrange(0, max_blowups + 1)
    return blow_up(surface, k) if k else surface


def random_integral_class(rng: random.Random, rank: int, span: int = 5) -> DivisorClass:
    return DivisorClass(tuple(Fraction(rng.randrange(-span, span + 1)) for _ in range(rank)))
