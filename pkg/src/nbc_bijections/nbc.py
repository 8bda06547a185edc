"""Broken circuits and NBC subsets of an ordered matroid."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .om import Matroid, charvec_key


@dataclass(frozen=True)
class BrokenCircuit:
    elements: frozenset[int]
    source_max: int

    @property
    def circuit(self) -> frozenset[int]:
        return self.elements | {self.source_max}


def broken_circuits(m: Matroid) -> list[BrokenCircuit]:
    """One broken circuit per circuit, in circuit order."""
    return [BrokenCircuit(c - {max(c)}, max(c)) for c in m.sorted_circuits()]


@lru_cache(maxsize=1024)
def _broken_sets(m: Matroid) -> tuple[frozenset[int], ...]:
    return tuple(sorted({b.elements for b in broken_circuits(m)}, key=lambda s: (len(s), sorted(s))))


def contained_broken_circuit(m: Matroid, s: Iterable[int]) -> BrokenCircuit | None:
    """A broken circuit contained in ``s``, or None if ``s`` is NBC."""
    s = frozenset(s)
    for b in broken_circuits(m):
        if b.elements <= s:
            return b
    return None


def is_nbc(m: Matroid, s: Iterable[int]) -> bool:
    s = frozenset(s)
    return not any(b <= s for b in _broken_sets(m))


def enumerate_nbc(m: Matroid) -> list[frozenset[int]]:
    """All NBC subsets, ordered by characteristic vector over the ground set.

    Depth-first growth in increasing element order; a branch is cut as soon as
    the partial set contains a broken circuit (NBC sets are closed downward).
    """
    broken = _broken_sets(m)
    if frozenset() in broken:
        return []
    ground = sorted(m.ground)
    # broken circuits indexed by their largest element: only those can become
    # contained when that element is appended
    by_last: dict[int, list[frozenset[int]]] = {}
    for b in broken:
        by_last.setdefault(max(b), []).append(b)

    out: list[frozenset[int]] = []

    def grow(current: frozenset[int], start: int) -> None:
        out.append(current)
        for i in range(start, len(ground)):
            e = ground[i]
            nxt = current | {e}
            if any(b <= nxt for b in by_last.get(e, ())):
                continue
            grow(nxt, i + 1)

    grow(frozenset(), 0)
    out.sort(key=lambda s: charvec_key(s, ground))
    return out
