"""The bijection from regions to affine NBC subsets, step by step.

A state ``(k, B, Δ)`` holds an affine NBC set ``B`` among ``H_1..H_k`` and a
region ``Δ`` of the arrangement ``H_{k+1}..H_m`` restricted to ``∩B``.  All
geometric decisions ("``Δ`` meets ``H_k``", "``Δ = Δ'``") are exact
feasibility questions on the cell's defining system.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..bijection import OmPairState
from .core import Arrangement, affine_nbc_obstruction, fmt_hset
from .feasibility import feasible_witness
from .regions import (
    RegionCell,
    RegionError,
    cell_system,
    check_cell,
    enumerate_regions,
    format_signs,
    make_cell,
)


class ArrContractViolation(ValueError):
    """An arrangement state or input violates the documented preconditions."""


@dataclass(frozen=True)
class ArrPairState:
    k: int
    nbc_part: frozenset[int]
    region: RegionCell

    def __post_init__(self):
        object.__setattr__(self, "nbc_part", frozenset(self.nbc_part))

    def row(self) -> str:
        """``k | B_k | region-signs`` as printed in traces."""
        return f"{self.k} | {fmt_hset(self.nbc_part)} | {format_signs(self.region.signs)}"


def _later(arr: Arrangement, k: int) -> frozenset[int]:
    return frozenset(range(k + 1, arr.size + 1))


def check_arr_state(arr: Arrangement, s: ArrPairState) -> None:
    if not 0 <= s.k <= arr.size:
        raise ArrContractViolation(f"k={s.k} outside 0..{arr.size}")
    if not s.nbc_part <= frozenset(range(1, s.k + 1)):
        raise ArrContractViolation(f"B_k={fmt_hset(s.nbc_part)} is not inside H1..H{s.k}")
    why = affine_nbc_obstruction(arr, s.nbc_part)
    if why is not None:
        raise ArrContractViolation(f"B_k is not affine NBC: {why}")
    if s.region.flat != s.nbc_part:
        raise ArrContractViolation(
            f"region lives on {fmt_hset(s.region.flat)}, expected {fmt_hset(s.nbc_part)}"
        )
    try:
        check_cell(arr, s.region, _later(arr, s.k))
    except RegionError as exc:
        raise ArrContractViolation(f"not a region of the restricted arrangement: {exc}") from None


def initial_arr_state(arr: Arrangement, region: RegionCell) -> ArrPairState:
    if region.flat:
        raise ArrContractViolation("start region must be full-dimensional")
    s = ArrPairState(0, frozenset(), region)
    check_arr_state(arr, s)
    return s


def _meets(arr: Arrangement, cell: RegionCell, i: int, side: int = 0, skip: Iterable[int] = ()):
    """Witness of ``cell ∩ H_i`` (side 0) or ``cell ∩ H_i^±``, or None."""
    eqs, strict = cell_system(arr, cell, skip)
    h = arr[i]
    if side == 0:
        eqs = eqs + [h.equation()]
    else:
        strict = strict + [(h.normal, h.offset, side)]
    return feasible_witness(eqs, strict, arr.dim)


def _forward(arr: Arrangement, s: ArrPairState) -> tuple[ArrPairState, int]:
    k = s.k + 1
    later = _later(arr, k)
    side = s.region.signs[k - 1]
    if k in s.nbc_part or side not in (1, -1):
        raise ArrContractViolation(f"H{k} does not separate the state cleanly (sign {side})")
    # Δ'_k: drop H_k from the defining arrangement, keep the witness
    widened = make_cell(arr, s.nbc_part, later, s.region.witness)
    if side < 0:
        return ArrPairState(k, s.nbc_part, widened), 3
    w = _meets(arr, widened, k)
    if w is None:
        return ArrPairState(k, s.nbc_part, widened), 2
    return ArrPairState(k, s.nbc_part | {k}, make_cell(arr, s.nbc_part | {k}, later, w)), 1


def _backward(arr: Arrangement, s: ArrPairState) -> tuple[ArrPairState, int]:
    k = s.k
    from_k = _later(arr, k - 1)
    if k in s.nbc_part:
        flat = s.nbc_part - {k}
        # Δ'_k ∩ H_k^+: on the larger flat, keep Δ_k's sides of H_{k+1}..H_m
        strict = [
            (arr[i].normal, arr[i].offset, s.region.signs[i - 1])
            for i in sorted(_later(arr, k))
            if s.region.signs[i - 1] in (1, -1)
        ]
        strict.append((arr[k].normal, arr[k].offset, 1))
        w = feasible_witness(arr.equations(flat), strict, arr.dim)
        if w is None:
            raise ArrContractViolation(f"no point of Δ'_{k} lies on the positive side of H{k}")
        return ArrPairState(k - 1, flat, make_cell(arr, flat, from_k, w)), 1
    if _meets(arr, s.region, k) is None:
        return ArrPairState(k - 1, s.nbc_part, make_cell(arr, s.nbc_part, from_k, s.region.witness)), 2
    w = _meets(arr, s.region, k, side=-1)
    if w is None:
        raise ArrContractViolation(f"region meets H{k} but has no part on its negative side")
    return ArrPairState(k - 1, s.nbc_part, make_cell(arr, s.nbc_part, from_k, w)), 3


def phi_step(arr: Arrangement, s: ArrPairState) -> ArrPairState:
    """Forward map on a state at ``k-1``."""
    if s.k >= arr.size:
        raise ArrContractViolation(f"no forward step from k={s.k}")
    check_arr_state(arr, s)
    return _forward(arr, s)[0]


def phi_step_case(arr: Arrangement, s: ArrPairState) -> tuple[ArrPairState, int]:
    """Forward map together with the case (1, 2 or 3) that fired."""
    if s.k >= arr.size:
        raise ArrContractViolation(f"no forward step from k={s.k}")
    check_arr_state(arr, s)
    return _forward(arr, s)


def phi_inverse_step(arr: Arrangement, s: ArrPairState) -> ArrPairState:
    """Inverse map on a state at ``k``."""
    if s.k <= 0:
        raise ArrContractViolation("no inverse step from k=0")
    check_arr_state(arr, s)
    return _backward(arr, s)[0]


def phi_trace(arr: Arrangement, region: RegionCell) -> tuple[list[ArrPairState], list[int]]:
    """States for ``k = 0..m`` and the case used at each step ``k = 1..m``."""
    s = initial_arr_state(arr, region)
    states, cases = [s], []
    for _ in range(arr.size):
        s, c = _forward(arr, s)
        states.append(s)
        cases.append(c)
    return states, cases


def phi_forward(arr: Arrangement, region: RegionCell) -> frozenset[int]:
    return phi_trace(arr, region)[0][-1].nbc_part


def phi_backward_trace(arr: Arrangement, nbc: Iterable[int]) -> list[ArrPairState]:
    """States from ``(m, nbc, ∩nbc)`` down to ``k = 0``, listed by increasing ``k``."""
    nbc = frozenset(nbc)
    why = affine_nbc_obstruction(arr, nbc)
    if why is not None:
        raise ArrContractViolation(f"not an affine NBC set: {why}")
    point = arr.flat_point(nbc)
    s = ArrPairState(arr.size, nbc, make_cell(arr, nbc, (), point))
    states = [s]
    for _ in range(arr.size):
        s, _ = _backward(arr, s)
        states.append(s)
    states.reverse()
    return states


def phi_backward(arr: Arrangement, nbc: Iterable[int]) -> RegionCell:
    return phi_backward_trace(arr, nbc)[0].region


def reachable_arr_states(arr: Arrangement) -> list[list[ArrPairState]]:
    """Every state visited by a forward pass from some region, by level."""
    levels: list[dict] = [dict() for _ in range(arr.size + 1)]
    for region in enumerate_regions(arr):
        for s in phi_trace(arr, region)[0]:
            levels[s.k].setdefault((s.nbc_part, s.region), s)
    return [list(lv.values()) for lv in levels]


def region_to_reorientation(arr: Arrangement, region: RegionCell) -> frozenset[int]:
    """Indices of the hyperplanes whose negative side contains ``region``."""
    if region.flat:
        raise ArrContractViolation("region must be full-dimensional")
    return frozenset(i for i, s in zip(arr.indices, region.signs) if s == -1)


def tau(arr: Arrangement, s: ArrPairState) -> OmPairState:
    """The matching oriented-matroid state of a linear-arrangement state."""
    if not arr.is_linear():
        raise ArrContractViolation("tau needs a linear arrangement")
    a = frozenset(i for i in _later(arr, s.k) if s.region.signs[i - 1] == -1)
    return OmPairState(s.k, s.nbc_part, a)
