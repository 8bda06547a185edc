"""Hyperplane arrangements with exact rational data.

Hyperplanes are indexed 1..m by list position; that index order is the total
order used for broken circuits.  ``H_i`` is ``normal·x = offset`` with
positive side ``normal·x > offset``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from ..om import MalformedInputError, OrientedMatroid, SignedSubset, charvec_key
from .linalg import dot, kernel_vector, rank, solve_affine, to_fraction


@dataclass(frozen=True)
class Hyperplane:
    normal: tuple[Fraction, ...]
    offset: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "normal", tuple(to_fraction(v) for v in self.normal))
        object.__setattr__(self, "offset", to_fraction(self.offset))
        if all(v == 0 for v in self.normal):
            raise MalformedInputError("hyperplane normal is zero")

    @property
    def dim(self) -> int:
        return len(self.normal)

    def value(self, x: Sequence[Fraction]) -> Fraction:
        """``normal·x - offset``; its sign is the side of ``x``."""
        return dot(self.normal, x) - self.offset

    def side(self, x: Sequence[Fraction]) -> int:
        v = self.value(x)
        return (v > 0) - (v < 0)

    def equation(self) -> tuple[tuple[Fraction, ...], Fraction]:
        return self.normal, self.offset

    def __str__(self) -> str:
        terms = " ".join(f"{c:+}*x{i + 1}" for i, c in enumerate(self.normal) if c != 0)
        return f"{terms} = {self.offset}"


@dataclass(frozen=True)
class Arrangement:
    dim: int
    hyperplanes: tuple[Hyperplane, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "hyperplanes", tuple(self.hyperplanes))
        for i, h in enumerate(self.hyperplanes, 1):
            if h.dim != self.dim:
                raise MalformedInputError(f"H{i} has {h.dim} coordinates, expected {self.dim}")
        # used as a cache key all over; tuples do not memoize their hash
        object.__setattr__(self, "_hash", hash((self.dim, self.hyperplanes)))

    def __hash__(self) -> int:
        return self._hash

    @classmethod
    def from_rows(cls, dim: int, rows: Iterable[tuple[Sequence, object]]) -> Arrangement:
        """``rows`` of ``(normal, offset)``."""
        return cls(dim, tuple(Hyperplane(tuple(n), b) for n, b in rows))

    @property
    def size(self) -> int:
        return len(self.hyperplanes)

    @property
    def indices(self) -> range:
        return range(1, self.size + 1)

    def __getitem__(self, i: int) -> Hyperplane:
        """1-based access."""
        if not 1 <= i <= self.size:
            raise IndexError(f"no hyperplane H{i}")
        return self.hyperplanes[i - 1]

    def is_linear(self) -> bool:
        return all(h.offset == 0 for h in self.hyperplanes)

    def equations(self, idx: Iterable[int]) -> list[tuple[tuple[Fraction, ...], Fraction]]:
        return [self[i].equation() for i in sorted(idx)]

    def flat_point(self, idx: Iterable[int]):
        """A point of ``∩{H_i : i in idx}`` or None if it is empty."""
        return _flat_point(self, frozenset(idx))

    def flat_dim(self, idx: Iterable[int]) -> int | None:
        idx = frozenset(idx)
        if _flat_point(self, idx) is None:
            return None
        return self.dim - _normal_rank(self, idx)

    def normal_rank(self, idx: Iterable[int]) -> int:
        return _normal_rank(self, frozenset(idx))


# arrangements are immutable, so flats can be cached per (arrangement, subset)
@lru_cache(maxsize=65536)
def _flat_point(arr: Arrangement, idx: frozenset[int]):
    return solve_affine(arr.equations(idx), arr.dim)


@lru_cache(maxsize=65536)
def _normal_rank(arr: Arrangement, idx: frozenset[int]) -> int:
    return rank([arr[i].normal for i in sorted(idx)])


def fmt_hset(s: Iterable[int]) -> str:
    """``{2, 4}`` -> ``"H2,H4"``; the empty set prints as ``"∅"``."""
    items = sorted(s)
    return ",".join(f"H{i}" for i in items) if items else "∅"


def affine_circuits(arr: Arrangement) -> list[frozenset[int]]:
    """Minimal subsets with nonempty intersection and ``dim(∩B) + |B| = n + 1``.

    These are exactly the minimal linearly dependent sets of normals whose
    hyperplanes share a point.
    """
    return list(_affine_circuits(arr))


@lru_cache(maxsize=1024)
def _affine_circuits(arr: Arrangement) -> tuple[frozenset[int], ...]:
    found: list[frozenset[int]] = []
    dependent_minimal: list[frozenset[int]] = []
    for r in range(1, arr.size + 1):
        for combo in combinations(arr.indices, r):
            s = frozenset(combo)
            if any(d <= s for d in dependent_minimal):
                continue
            if arr.normal_rank(s) == r:
                continue
            dependent_minimal.append(s)
            if arr.flat_point(s) is not None:
                found.append(s)
    return tuple(found)


def affine_broken_circuits(arr: Arrangement) -> list[frozenset[int]]:
    return list(_affine_broken(arr))


@lru_cache(maxsize=1024)
def _affine_broken(arr: Arrangement) -> tuple[frozenset[int], ...]:
    return tuple(sorted({c - {max(c)} for c in _affine_circuits(arr)}, key=lambda s: (len(s), sorted(s))))


def affine_nbc_obstruction(arr: Arrangement, s: Iterable[int]) -> str | None:
    """Why ``s`` is not affine NBC, or None if it is."""
    s = frozenset(s)
    if not s <= frozenset(arr.indices):
        return f"{sorted(s)} references hyperplanes outside H1..H{arr.size}"
    if arr.flat_point(s) is None:
        return f"{fmt_hset(s)} has empty intersection"
    for b in _affine_broken(arr):
        if b <= s:
            return f"{fmt_hset(s)} contains the broken circuit {fmt_hset(b)}"
    return None


def is_affine_nbc(arr: Arrangement, s: Iterable[int]) -> bool:
    return affine_nbc_obstruction(arr, s) is None


def enumerate_affine_nbc(arr: Arrangement) -> list[frozenset[int]]:
    """All affine NBC subsets, ordered by characteristic vector."""
    broken = _affine_broken(arr)
    if frozenset() in broken:
        return []
    out: list[frozenset[int]] = []
    idx = list(arr.indices)

    def grow(current: frozenset[int], start: int) -> None:
        out.append(current)
        for i in range(start, len(idx)):
            nxt = current | {idx[i]}
            if any(b <= nxt for b in broken):
                continue
            if arr.flat_point(nxt) is None:
                continue
            grow(nxt, i + 1)

    grow(frozenset(), 0)
    out.sort(key=lambda s: charvec_key(s, idx))
    return out


def om_from_vectors(vectors: Sequence[Sequence[Fraction]]) -> OrientedMatroid:
    """Oriented matroid of the linear dependencies among ``vectors`` (element
    ``i`` is ``vectors[i-1]``).  Zero vectors become loops."""
    vecs = [tuple(map(to_fraction, v)) for v in vectors]
    m = len(vecs)
    circuits: set[SignedSubset] = set()
    minimal: list[frozenset[int]] = []
    for r in range(1, m + 1):
        for combo in combinations(range(1, m + 1), r):
            s = frozenset(combo)
            if any(d <= s for d in minimal):
                continue
            lam = kernel_vector([vecs[i - 1] for i in combo])
            if lam is None:
                continue
            minimal.append(s)
            x = SignedSubset(
                frozenset(e for e, v in zip(combo, lam) if v > 0),
                frozenset(e for e, v in zip(combo, lam) if v < 0),
            )
            circuits.add(x)
            circuits.add(-x)
    return OrientedMatroid.on(m, circuits)


def om_from_linear_arrangement(arr: Arrangement) -> OrientedMatroid:
    if not arr.is_linear():
        bad = [i for i in arr.indices if arr[i].offset != 0]
        raise MalformedInputError(f"arrangement is not linear: nonzero offsets at {fmt_hset(bad)}")
    return om_from_vectors([h.normal for h in arr.hyperplanes])


def cone(arr: Arrangement) -> Arrangement:
    """``cH_i: normal·x = offset·x_{n+1}`` for each ``H_i``, then ``K0: x_{n+1} = 0``."""
    hs = [Hyperplane(h.normal + (-h.offset,), 0) for h in arr.hyperplanes]
    hs.append(Hyperplane(tuple([Fraction(0)] * arr.dim + [Fraction(1)]), 0))
    return Arrangement(arr.dim + 1, tuple(hs))


def decone(carr: Arrangement) -> Arrangement:
    """Restrict a cone back to ``x_{n+1} = 1`` (drops the last hyperplane)."""
    hs = [Hyperplane(h.normal[:-1], -h.normal[-1]) for h in carr.hyperplanes[:-1]]
    return Arrangement(carr.dim - 1, tuple(hs))


def permute_arrangement(arr: Arrangement, order: Sequence[int]) -> Arrangement:
    """New arrangement whose i-th hyperplane is ``arr[order[i-1]]``."""
    return Arrangement(arr.dim, tuple(arr[i] for i in order))


__all__ = [
    "Arrangement",
    "Hyperplane",
    "affine_broken_circuits",
    "affine_circuits",
    "affine_nbc_obstruction",
    "cone",
    "decone",
    "enumerate_affine_nbc",
    "fmt_hset",
    "is_affine_nbc",
    "om_from_linear_arrangement",
    "om_from_vectors",
    "permute_arrangement",
]
