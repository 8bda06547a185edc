"""The bijection from acyclic reorientations to NBC subsets.

A state ``(k, N, A)`` pairs an NBC set ``N`` inside the first ``k`` elements
with a reorientation set ``A`` of the remaining ones such that the minor

    M_k = reorient(M \\ (E_k - N) / N, A)

is acyclic.  ``psi_step`` advances ``k`` by one; ``psi_inverse_step`` undoes
it.  Starting from ``(0, ∅, A)`` with ``A`` acyclic and running to ``k = m``
ends at ``(m, N, ∅)`` with ``N`` an NBC set.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import chain, combinations
from typing import Iterable

from .nbc import contained_broken_circuit, is_nbc
from .om import (
    OrientedMatroid,
    charvec_key,
    contract_om,
    delete_om,
    fmt_set,
    is_acyclic,
    positive_circuit,
    reorient,
)

# validate every intermediate state, not only the ones handed in by callers
DEBUG = bool(os.environ.get("NBC_BIJECTIONS_DEBUG"))


class ContractViolation(ValueError):
    """An input state or set does not satisfy the documented preconditions."""


@dataclass(frozen=True)
class OmPairState:
    k: int
    nbc_part: frozenset[int]
    reorient_part: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "nbc_part", frozenset(self.nbc_part))
        object.__setattr__(self, "reorient_part", frozenset(self.reorient_part))

    def row(self) -> str:
        """``k | N_k | A_k`` as printed in traces."""
        return f"{self.k} | {fmt_set(self.nbc_part)} | {fmt_set(self.reorient_part)}"

    def __str__(self) -> str:
        return f"({fmt_set(self.nbc_part)}; {fmt_set(self.reorient_part)})"


def _order(om: OrientedMatroid) -> list[int]:
    return sorted(om.ground)


def _prefix(om: OrientedMatroid, k: int) -> frozenset[int]:
    return frozenset(_order(om)[:k])


@lru_cache(maxsize=4096)
def _minor(om: OrientedMatroid, deleted: frozenset[int], contracted: frozenset[int]) -> OrientedMatroid:
    return contract_om(delete_om(om, deleted), contracted)


def state_minor(om: OrientedMatroid, s: OmPairState) -> OrientedMatroid:
    """``M_k`` for the state ``s``; its ground set is ``E - E_k``."""
    deleted = _prefix(om, s.k) - s.nbc_part
    return reorient(_minor(om, deleted, s.nbc_part), s.reorient_part)


def check_state(om: OrientedMatroid, s: OmPairState) -> None:
    """Raise ContractViolation unless ``s`` is a valid state of ``om``."""
    m = om.size
    if not 0 <= s.k <= m:
        raise ContractViolation(f"k={s.k} outside 0..{m}")
    prefix = _prefix(om, s.k)
    if not s.nbc_part <= prefix:
        raise ContractViolation(f"N_k={fmt_set(s.nbc_part)} is not inside E_{s.k}")
    if not s.reorient_part <= om.ground - prefix:
        raise ContractViolation(f"A_k={fmt_set(s.reorient_part)} is not inside E - E_{s.k}")
    if not is_nbc(om.underlying, s.nbc_part):
        bc = contained_broken_circuit(om.underlying, s.nbc_part)
        raise ContractViolation(
            f"condition (I) fails: N_k={fmt_set(s.nbc_part)} contains broken circuit {fmt_set(bc.elements)}"
        )
    x = positive_circuit(state_minor(om, s))
    if x is not None:
        raise ContractViolation(f"condition (II) fails: M_{s.k} has positive circuit {x}")


def is_valid_state(om: OrientedMatroid, s: OmPairState) -> bool:
    try:
        check_state(om, s)
    except ContractViolation:
        return False
    return True


def initial_state(om: OrientedMatroid, a0: Iterable[int]) -> OmPairState:
    a0 = frozenset(a0)
    if not a0 <= om.ground:
        raise ContractViolation(f"{fmt_set(a0)} is not a subset of the ground set")
    x = positive_circuit(reorient(om, a0))
    if x is not None:
        raise ContractViolation(
            f"{fmt_set(a0)} is not an acyclic reorientation: positive circuit {x}"
        )
    return OmPairState(0, frozenset(), a0)


def _forward(om: OrientedMatroid, s: OmPairState, minor: OrientedMatroid):
    """One forward step given ``minor = M_{k-1}``; returns (state, M_k, case)."""
    e = _order(om)[s.k]
    if e in s.reorient_part:
        return OmPairState(s.k + 1, s.nbc_part, s.reorient_part - {e}), delete_om(minor, {e}), 3
    if is_acyclic(reorient(minor, {e})):
        return OmPairState(s.k + 1, s.nbc_part | {e}, s.reorient_part), contract_om(minor, {e}), 1
    return OmPairState(s.k + 1, s.nbc_part, s.reorient_part), delete_om(minor, {e}), 2


def _backward(om: OrientedMatroid, s: OmPairState):
    """One inverse step; returns (state, case)."""
    e = _order(om)[s.k - 1]
    if e in s.nbc_part:
        return OmPairState(s.k - 1, s.nbc_part - {e}, s.reorient_part), 1
    # M'_{k-1} = reorient(M \ (E_{k-1} - N_k) / N_k, A_k), which still contains e_k
    deleted = _prefix(om, s.k - 1) - s.nbc_part
    prime = reorient(_minor(om, deleted, s.nbc_part), s.reorient_part)
    if is_acyclic(reorient(prime, {e})):
        return OmPairState(s.k - 1, s.nbc_part, s.reorient_part | {e}), 3
    return OmPairState(s.k - 1, s.nbc_part, s.reorient_part), 2


def psi_step(om: OrientedMatroid, s: OmPairState) -> OmPairState:
    """Apply the forward map to a state at ``k-1``, giving a state at ``k``."""
    if s.k >= om.size:
        raise ContractViolation(f"no forward step from k={s.k} (m={om.size})")
    check_state(om, s)
    out, _, _ = _forward(om, s, state_minor(om, s))
    if DEBUG:
        check_state(om, out)
    return out


def psi_inverse_step(om: OrientedMatroid, s: OmPairState) -> OmPairState:
    """Apply the inverse map to a state at ``k``, giving a state at ``k-1``."""
    if s.k <= 0:
        raise ContractViolation("no inverse step from k=0")
    check_state(om, s)
    out, _ = _backward(om, s)
    if DEBUG:
        check_state(om, out)
    return out


def psi_trace(om: OrientedMatroid, a0: Iterable[int]) -> list[OmPairState]:
    """All states ``(k, N_k, A_k)`` for ``k = 0..m`` starting from ``(∅, a0)``."""
    s = initial_state(om, a0)
    minor = reorient(om, s.reorient_part)
    trace = [s]
    for _ in range(om.size):
        s, minor, _ = _forward(om, s, minor)
        if DEBUG:
            check_state(om, s)
        trace.append(s)
    return trace


def psi_forward(om: OrientedMatroid, a0: Iterable[int]) -> frozenset[int]:
    """The NBC set assigned to the acyclic reorientation ``a0``."""
    return psi_trace(om, a0)[-1].nbc_part


def psi_backward_trace(om: OrientedMatroid, n: Iterable[int]) -> list[OmPairState]:
    """States from ``(m, n, ∅)`` down to ``k = 0``, listed in increasing ``k``."""
    n = frozenset(n)
    if not n <= om.ground:
        raise ContractViolation(f"{fmt_set(n)} is not a subset of the ground set")
    bc = contained_broken_circuit(om.underlying, n)
    if bc is not None:
        raise ContractViolation(
            f"{fmt_set(n)} is not NBC: contains broken circuit {fmt_set(bc.elements)}"
        )
    s = OmPairState(om.size, n, frozenset())
    trace = [s]
    for _ in range(om.size):
        s, _ = _backward(om, s)
        if DEBUG:
            check_state(om, s)
        trace.append(s)
    trace.reverse()
    return trace


def psi_backward(om: OrientedMatroid, n: Iterable[int]) -> frozenset[int]:
    """The acyclic reorientation mapped onto the NBC set ``n``."""
    return psi_backward_trace(om, n)[0].reorient_part


def _powerset(ground: list[int]):
    return chain.from_iterable(combinations(ground, r) for r in range(len(ground) + 1))


def enumerate_acyclic_reorientations(om: OrientedMatroid) -> list[frozenset[int]]:
    """Brute force over all subsets of the ground set."""
    ground = _order(om)
    out = [frozenset(a) for a in _powerset(ground) if is_acyclic(reorient(om, a))]
    out.sort(key=lambda s: charvec_key(s, ground))
    return out


def reachable_states(om: OrientedMatroid) -> list[list[OmPairState]]:
    """``states[k]`` lists every state at level ``k`` reached from some acyclic
    reorientation (equivalently, by bijectivity, every valid state)."""
    levels: list[set[OmPairState]] = [set() for _ in range(om.size + 1)]
    for a in enumerate_acyclic_reorientations(om):
        for s in psi_trace(om, a):
            levels[s.k].add(s)
    return [sorted(lv, key=lambda s: (sorted(s.nbc_part), sorted(s.reorient_part))) for lv in levels]

