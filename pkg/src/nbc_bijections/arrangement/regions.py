"""Regions of an arrangement restricted to a flat.

The restricted arrangement ``A_among / B`` lives on the flat ``F = ∩B`` and
consists of the traces of the hyperplanes indexed by ``among`` that cut ``F``
properly.  A region of it is stored as a ``RegionCell``: the flat, a full
sign vector over all ``m`` hyperplanes, and an interior witness point.

Sign vector entries:

* ``0``    the hyperplane contains ``F``;
* ``±1``   the cell lies on that side (hyperplanes disjoint from ``F`` keep
  their constant side, as do cutting hyperplanes listed in ``among``);
* ``None`` the hyperplane cuts ``F`` but is not part of the restricted
  arrangement, so the cell straddles it (printed ``*``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .core import Arrangement, fmt_hset
from .feasibility import feasible_witness

CONTAINS, DISJOINT, CUTS = "contains", "disjoint", "cuts"

_SIGN_CHAR = {1: "+", -1: "-", 0: "0", None: "*"}
_CHAR_SIGN = {"+": 1, "-": -1, "0": 0, "*": None}


class RegionError(ValueError):
    """Raised for empty flats, infeasible sign vectors and malformed cells."""


def format_signs(signs: Sequence[int | None]) -> str:
    return ",".join(_SIGN_CHAR[s] for s in signs)


def parse_signs(text: str) -> tuple[int | None, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(_CHAR_SIGN[t.strip()] for t in text.split(","))
    except KeyError as exc:
        raise RegionError(f"bad sign {exc.args[0]!r}; expected one of + - 0 *") from None


def _sign_key(signs: Sequence[int | None]) -> tuple[int, ...]:
    order = {1: 0, -1: 1, 0: 2, None: 3}
    return tuple(order[s] for s in signs)


@dataclass(frozen=True)
class RegionCell:
    flat: frozenset[int]
    signs: tuple[int | None, ...]
    witness: tuple[Fraction, ...] = field(compare=False)

    def __str__(self) -> str:
        return format_signs(self.signs)

    def sort_key(self):
        return _sign_key(self.signs)


@lru_cache(maxsize=4096)
def positions(arr: Arrangement, flat: frozenset[int]) -> tuple[str, ...]:
    """Position of every hyperplane relative to ``∩flat`` (which must be nonempty)."""
    base = arr.flat_dim(flat)
    if base is None:
        raise RegionError(f"{fmt_hset(flat)} has empty intersection")
    out = []
    for i in arr.indices:
        d = arr.flat_dim(flat | {i})
        if d is None:
            out.append(DISJOINT)
        elif d == base:
            out.append(CONTAINS)
        else:
            out.append(CUTS)
    return tuple(out)


def active(arr: Arrangement, flat: frozenset[int], among: Iterable[int]) -> list[int]:
    """Indices in ``among`` whose hyperplanes cut ``∩flat`` properly."""
    pos = positions(arr, flat)
    return sorted(i for i in among if pos[i - 1] == CUTS)


def make_cell(arr: Arrangement, flat: Iterable[int], among: Iterable[int], witness) -> RegionCell:
    """The cell of ``A_among / flat`` containing ``witness``."""
    flat = frozenset(flat)
    among = frozenset(among)
    witness = tuple(Fraction(v) for v in witness)
    pos = positions(arr, flat)
    signs: list[int | None] = []
    for i in arr.indices:
        h = arr[i]
        p = pos[i - 1]
        if p == CONTAINS:
            if h.side(witness) != 0:
                raise RegionError(f"witness is not on the flat {fmt_hset(flat)} (H{i})")
            signs.append(0)
        elif p == DISJOINT:
            signs.append(h.side(witness))
        elif i in among:
            s = h.side(witness)
            if s == 0:
                raise RegionError(f"witness lies on H{i}, not in an open cell")
            signs.append(s)
        else:
            signs.append(None)
    for i in flat:
        if arr[i].side(witness) != 0:
            raise RegionError(f"witness is not on H{i}")
    return RegionCell(flat, tuple(signs), witness)


def cell_system(arr: Arrangement, cell: RegionCell, skip: Iterable[int] = ()):
    """Equalities and strict inequalities cutting out ``cell`` inside the
    ambient space, leaving out the hyperplanes in ``skip``."""
    skip = set(skip)
    pos = positions(arr, cell.flat)
    eqs = arr.equations(cell.flat)
    strict = [
        (arr[i].normal, arr[i].offset, s)
        for i, s in zip(arr.indices, cell.signs)
        if s is not None and s != 0 and pos[i - 1] == CUTS and i not in skip
    ]
    return eqs, strict


def enumerate_regions(
    arr: Arrangement, flat: Iterable[int] = (), among: Iterable[int] | None = None
) -> list[RegionCell]:
    """All regions of the arrangement of ``among`` (default: every hyperplane)
    restricted to ``∩flat``, in sign-vector order."""
    flat = frozenset(flat)
    among = frozenset(arr.indices if among is None else among)
    start = arr.flat_point(flat)
    if start is None:
        raise RegionError(f"{fmt_hset(flat)} has empty intersection")
    act = active(arr, flat, among)
    eqs = arr.equations(flat)
    cells: list[RegionCell] = []

    def branch(level: int, chosen: list, witness) -> None:
        if level == len(act):
            cells.append(make_cell(arr, flat, among, witness))
            return
        h = arr[act[level]]
        here = h.side(witness)
        for s in (1, -1):
            trial = chosen + [(h.normal, h.offset, s)]
            if s == here:
                w = witness
            else:
                w = feasible_witness(eqs, trial, arr.dim)
                if w is None:
                    continue
            branch(level + 1, trial, w)

    # the starting witness may lie on some active hyperplanes; feasibility
    # re-solves whenever the cached point does not already fit
    branch(0, [], start)
    cells.sort(key=RegionCell.sort_key)
    return cells


def count_regions(arr: Arrangement, flat: Iterable[int] = (), among: Iterable[int] | None = None) -> int:
    return len(enumerate_regions(arr, flat, among))


def region_from_signs(arr: Arrangement, signs: Sequence[int | None]) -> RegionCell:
    """The full-dimensional region with the given ± sign vector."""
    if len(signs) != arr.size:
        raise RegionError(f"expected {arr.size} signs, got {len(signs)}")
    if any(s not in (1, -1) for s in signs):
        raise RegionError("a region of the whole arrangement needs a + or - for every hyperplane")
    strict = [(h.normal, h.offset, s) for h, s in zip(arr.hyperplanes, signs)]
    w = feasible_witness([], strict, arr.dim)
    if w is None:
        raise RegionError(f"no region has signs {format_signs(signs)}")
    return make_cell(arr, (), arr.indices, w)


def check_cell(arr: Arrangement, cell: RegionCell, among: Iterable[int]) -> None:
    """Raise RegionError unless ``cell`` is a region of ``A_among / cell.flat``."""
    try:
        expected = make_cell(arr, cell.flat, among, cell.witness)
    except RegionError as exc:
        raise RegionError(f"witness does not certify the cell: {exc}") from None
    if expected.signs != cell.signs:
        raise RegionError(
            f"sign vector {format_signs(cell.signs)} disagrees with witness ({format_signs(expected.signs)})"
        )
