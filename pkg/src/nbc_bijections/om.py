"""Oriented matroids and matroids given by their (signed) circuits.

Elements are positive integers.  The total order on the ground set is the
integer order, and elements keep their global index under deletion and
contraction, so a minor of a matroid on ``{1..m}`` lives on a subset of
``{1..m}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable


class MalformedInputError(ValueError):
    """Raised when an input references elements outside the ground set or is
    otherwise structurally broken."""


def fmt_set(s: Iterable[int], prefix: str = "e") -> str:
    """``{1, 3}`` -> ``"e1,e3"``; the empty set prints as ``"∅"``."""
    items = sorted(s)
    if not items:
        return "∅"
    return ",".join(f"{prefix}{i}" for i in items)


def charvec_key(s: Iterable[int], ground: Iterable[int]) -> tuple[int, ...]:
    """Sort key: the characteristic vector of ``s`` over the sorted ground set."""
    s = set(s)
    return tuple(1 if e in s else 0 for e in sorted(ground))


@dataclass(frozen=True)
class SignedSubset:
    positive: frozenset[int] = frozenset()
    negative: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "positive", frozenset(self.positive))
        object.__setattr__(self, "negative", frozenset(self.negative))
        if self.positive & self.negative:
            raise MalformedInputError(
                f"signed subset has overlapping parts: {sorted(self.positive & self.negative)}"
            )

    @classmethod
    def of(cls, positive: Iterable[int] = (), negative: Iterable[int] = ()) -> SignedSubset:
        return cls(frozenset(positive), frozenset(negative))

    @property
    def support(self) -> frozenset[int]:
        return self.positive | self.negative

    def __neg__(self) -> SignedSubset:
        return SignedSubset(self.negative, self.positive)

    def is_positive(self) -> bool:
        return not self.negative

    def minus(self, x: Iterable[int]) -> SignedSubset:
        """``Y \\ X``: drop the elements of ``x`` from both parts."""
        x = frozenset(x)
        return SignedSubset(self.positive - x, self.negative - x)

    def reoriented(self, a: Iterable[int]) -> SignedSubset:
        a = frozenset(a)
        return SignedSubset(
            (self.positive - a) | (self.negative & a),
            (self.negative - a) | (self.positive & a),
        )

    def sort_key(self) -> tuple:
        return (len(self.support), sorted(self.support), sorted(self.positive))

    def __str__(self) -> str:
        return f"({fmt_set(self.positive)}; {fmt_set(self.negative)})"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    axiom: str | None = None
    witnesses: tuple = ()
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return f"violates {self.axiom}: {self.message}"


def _check_range(elements: Iterable[int], ground: frozenset[int]) -> None:
    bad = sorted(set(elements) - ground)
    if bad:
        raise MalformedInputError(f"elements {bad} are outside the ground set")


@dataclass(frozen=True)
class Matroid:
    ground: frozenset[int]
    circuits: frozenset[frozenset[int]]

    def __post_init__(self):
        object.__setattr__(self, "ground", frozenset(self.ground))
        object.__setattr__(self, "circuits", frozenset(frozenset(c) for c in self.circuits))

    @classmethod
    def on(cls, m: int, circuits: Iterable[Iterable[int]]) -> Matroid:
        """Matroid on ``{1..m}``."""
        return cls(frozenset(range(1, m + 1)), frozenset(frozenset(c) for c in circuits))

    @property
    def size(self) -> int:
        return len(self.ground)

    def sorted_circuits(self) -> list[frozenset[int]]:
        return sorted(self.circuits, key=lambda c: (len(c), sorted(c)))


@dataclass(frozen=True)
class OrientedMatroid:
    ground: frozenset[int]
    circuits: frozenset[SignedSubset]

    def __post_init__(self):
        object.__setattr__(self, "ground", frozenset(self.ground))
        object.__setattr__(self, "circuits", frozenset(self.circuits))

    @classmethod
    def on(cls, m: int, circuits: Iterable[SignedSubset]) -> OrientedMatroid:
        """Oriented matroid on ``{1..m}`` with the given signed circuits as-is."""
        return cls(frozenset(range(1, m + 1)), frozenset(circuits))

    @classmethod
    def from_representatives(cls, m: int, reps: Iterable[SignedSubset]) -> OrientedMatroid:
        """Build from one representative per ``±X`` pair."""
        circuits = set()
        for x in reps:
            circuits.add(x)
            circuits.add(-x)
        return cls.on(m, circuits)

    @property
    def size(self) -> int:
        return len(self.ground)

    @cached_property
    def underlying(self) -> Matroid:
        return underlying(self)

    def sorted_circuits(self) -> list[SignedSubset]:
        return sorted(self.circuits, key=SignedSubset.sort_key)

    def representatives(self) -> list[SignedSubset]:
        """One circuit of each ``±X`` pair, the one whose least element is positive."""
        reps = []
        for x in self.sorted_circuits():
            if min(x.support) in x.positive:
                reps.append(x)
        return reps


def validate_om_axioms(circuits: Iterable[SignedSubset], m: int | Iterable[int]) -> ValidationReport:
    """Check the signed-circuit axioms on a collection over ``{1..m}`` (or over
    an explicit ground set).  Returns the first violation found."""
    ground = frozenset(range(1, m + 1)) if isinstance(m, int) else frozenset(m)
    cs = list(circuits)
    for x in cs:
        _check_range(x.support, ground)
    cset = set(cs)

    for x in cs:
        if not x.support:
            return ValidationReport(False, "C1", (x,), "the empty signed subset is a circuit")
    for x in cs:
        if -x not in cset:
            return ValidationReport(False, "C2", (x,), f"{x} is present but {-x} is not")

    ordered = sorted(cset, key=SignedSubset.sort_key)
    for x in ordered:
        for y in ordered:
            if x.support <= y.support and x != y and x != -y:
                return ValidationReport(
                    False, "C3", (x, y), f"support of {x} lies in support of {y}"
                )

    for x in ordered:
        for y in ordered:
            if x == y or x == -y:
                continue
            for e in sorted(x.positive & y.negative):
                pos = (x.positive | y.positive) - {e}
                neg = (x.negative | y.negative) - {e}
                if not any(z.positive <= pos and z.negative <= neg for z in ordered):
                    return ValidationReport(
                        False, "C4", (x, y, e),
                        f"no circuit eliminates e{e} from {x} and {y}",
                    )
    return ValidationReport(True)


def validate_matroid_axioms(circuits: Iterable[Iterable[int]], m: int | Iterable[int]) -> ValidationReport:
    ground = frozenset(range(1, m + 1)) if isinstance(m, int) else frozenset(m)
    cs = sorted({frozenset(c) for c in circuits}, key=lambda c: (len(c), sorted(c)))
    for c in cs:
        _check_range(c, ground)
    if frozenset() in cs:
        return ValidationReport(False, "C1", (frozenset(),), "the empty set is a circuit")
    for x in cs:
        for y in cs:
            if x < y:
                return ValidationReport(False, "C2", (x, y), f"{fmt_set(x)} is contained in {fmt_set(y)}")
    for x, y in combinations(cs, 2):
        for e in sorted(x & y):
            rest = (x | y) - {e}
            if not any(z <= rest for z in cs):
                return ValidationReport(
                    False, "C3", (x, y, e),
                    f"no circuit inside {fmt_set(rest)} (eliminating e{e} from {fmt_set(x)}, {fmt_set(y)})",
                )
    return ValidationReport(True)


def underlying(om: OrientedMatroid) -> Matroid:
    return Matroid(om.ground, frozenset(x.support for x in om.circuits))


def reorient(om: OrientedMatroid, a: Iterable[int]) -> OrientedMatroid:
    a = frozenset(a)
    if not a:
        return om
    return OrientedMatroid(om.ground, frozenset(x.reoriented(a) for x in om.circuits))


def delete_om(om: OrientedMatroid, x: Iterable[int]) -> OrientedMatroid:
    x = frozenset(x)
    if not x:
        return om
    return OrientedMatroid(
        om.ground - x, frozenset(y for y in om.circuits if not (y.support & x))
    )


def _minimal_supports(cands: set[SignedSubset]) -> frozenset[SignedSubset]:
    supports = {y.support for y in cands}
    minimal = {s for s in supports if not any(t < s for t in supports)}
    return frozenset(y for y in cands if y.support in minimal)


def contract_om(om: OrientedMatroid, x: Iterable[int]) -> OrientedMatroid:
    x = frozenset(x)
    if not x:
        return om
    cands = {y.minus(x) for y in om.circuits if y.support - x}
    return OrientedMatroid(om.ground - x, _minimal_supports(cands))


def delete_matroid(m: Matroid, x: Iterable[int]) -> Matroid:
    x = frozenset(x)
    return Matroid(m.ground - x, frozenset(c for c in m.circuits if not (c & x)))


def contract_matroid(m: Matroid, x: Iterable[int]) -> Matroid:
    x = frozenset(x)
    cands = {c - x for c in m.circuits if c - x}
    return Matroid(m.ground - x, frozenset(c for c in cands if not any(d < c for d in cands)))


def positive_circuit(om: OrientedMatroid) -> SignedSubset | None:
    """A positive circuit of ``om`` if there is one (smallest first)."""
    found = [x for x in om.circuits if not x.negative]
    if not found:
        return None
    return min(found, key=SignedSubset.sort_key)


def is_acyclic(om: OrientedMatroid) -> bool:
    return not any(not x.negative for x in om.circuits)


def is_loopless(m: Matroid) -> bool:
    return all(len(c) != 1 for c in m.circuits)


def is_flat(m: Matroid, x: Iterable[int]) -> bool:
    x = frozenset(x)
    for e in m.ground - x:
        closure = x | {e}
        if any(e in c and c <= closure for c in m.circuits):
            return False
    return True


def relabel_om(om: OrientedMatroid, mapping: dict[int, int]) -> OrientedMatroid:
    """Rename elements through ``mapping`` (used to change the total order)."""
    def f(s):
        return frozenset(mapping[e] for e in s)

    return OrientedMatroid(
        f(om.ground),
        frozenset(SignedSubset(f(x.positive), f(x.negative)) for x in om.circuits),
    )
