"""Random realizable oriented matroids and random rational arrangements."""

from __future__ import annotations

import random
from fractions import Fraction

from .arrangement.core import Arrangement, Hyperplane, om_from_vectors
from .om import OrientedMatroid


def random_matrix(rng: random.Random, n: int, m: int, lo: int = -5, hi: int = 5) -> list[list[int]]:
    """``n x m`` integer matrix, returned as a list of ``m`` columns."""
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)]


def random_realizable_om(rng: random.Random, n: int, m: int) -> OrientedMatroid:
    """Oriented matroid of the columns of a random integer matrix in [-5, 5]."""
    return om_from_vectors(random_matrix(rng, n, m))


def _rational(rng: random.Random, lo: int = -4, hi: int = 4) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.choice((1, 1, 2, 3)))


def _nonzero_normal(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    while True:
        v = tuple(_rational(rng) for _ in range(n))
        if any(v):
            return v


def random_arrangement(
    rng: random.Random,
    n: int,
    m: int,
    *,
    parallel: bool = False,
    duplicate: bool = False,
    linear: bool = False,
) -> Arrangement:
    """Random arrangement of ``m`` hyperplanes in dimension ``n``.

    ``parallel`` forces a pair of distinct parallel hyperplanes, ``duplicate``
    forces a repeated hyperplane (possibly with a rescaled equation).  Small
    coefficients make accidental degeneracies (concurrent lines, further
    parallels) common, which is intended.
    """
    hs: list[Hyperplane] = []
    while len(hs) < m:
        normal = _nonzero_normal(rng, n)
        offset = Fraction(0) if linear else _rational(rng, -3, 3)
        hs.append(Hyperplane(normal, offset))
    free = list(range(m))
    if parallel and m >= 2 and not linear:
        i, j = rng.sample(free, 2)
        if m >= 4:
            free = [t for t in free if t not in (i, j)]
        scale = Fraction(rng.choice((-2, -1, 1, 2, 3)))
        base = hs[i]
        shift = base.offset + rng.choice((-2, -1, 1, 2))
        hs[j] = Hyperplane(tuple(scale * v for v in base.normal), scale * shift)
    if duplicate and m >= 2:
        i, j = rng.sample(free, 2)
        scale = Fraction(rng.choice((-1, 1, 1, 2)))
        base = hs[i]
        hs[j] = Hyperplane(tuple(scale * v for v in base.normal), scale * base.offset)
    return Arrangement(n, tuple(hs))
