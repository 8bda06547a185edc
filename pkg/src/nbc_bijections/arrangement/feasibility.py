"""Exact feasibility of mixed equality / strict-inequality systems.

Equalities are eliminated by substitution, strict inequalities by
Fourier-Motzkin.  A feasible system yields a rational witness by
back-substitution, choosing at each variable the simplest rational in the
open interval left by the bounds.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .linalg import Vector, to_fraction

# (coefficients, constant) meaning coefficients·x > constant
_Strict = tuple[tuple[Fraction, ...], Fraction]


def _simplest_positive(lo: Fraction, hi: Fraction | None) -> Fraction:
    """Simplest rational in the open interval (lo, hi) with 0 <= lo."""
    fl = math.floor(lo)
    if hi is None or fl + 1 < hi:
        return Fraction(fl + 1)
    # lo and hi share the integer part fl (hi may equal fl + 1)
    a, b = lo - fl, hi - fl
    inv_hi = 1 / b
    inv_lo = None if a == 0 else 1 / a
    return fl + 1 / _simplest_positive(inv_hi, inv_lo)


def simplest_between(lo: Fraction | None, hi: Fraction | None) -> Fraction:
    """Simplest rational strictly between ``lo`` and ``hi`` (None = unbounded)."""
    if lo is not None and hi is not None and not lo < hi:
        raise ValueError(f"empty interval ({lo}, {hi})")
    if (lo is None or lo < 0) and (hi is None or hi > 0):
        return Fraction(0)
    if lo is not None and lo >= 0:
        return _simplest_positive(lo, hi)
    # hi <= 0
    return -_simplest_positive(-hi, None if lo is None else -lo)


def _normalize(c: Sequence[Fraction], d: Fraction) -> _Strict:
    scale = max(abs(v) for v in c)
    return tuple(v / scale for v in c), d / scale


def _solve_strict(ineqs: list[_Strict], nvars: int) -> list[Fraction] | None:
    live: set[_Strict] = set()
    for c, d in ineqs:
        if all(v == 0 for v in c):
            if not 0 > d:
                return None
            continue
        live.add(_normalize(c, d))
    if not live:
        return [Fraction(0)] * nvars

    # eliminate the variable producing the fewest combined constraints
    best = None
    for j in range(nvars):
        pos = sum(1 for c, _ in live if c[j] > 0)
        neg = sum(1 for c, _ in live if c[j] < 0)
        if pos + neg == 0:
            continue
        cost = pos * neg - pos - neg
        if best is None or cost < best[0]:
            best = (cost, j)
    j = best[1]

    lower, upper, rest = [], [], []
    for c, d in sorted(live):
        if c[j] > 0:
            lower.append((c, d))
        elif c[j] < 0:
            upper.append((c, d))
        else:
            rest.append((c, d))

    def bound(c, d):
        # x_j  vs  (d - Σ_{i≠j} c_i x_i) / c_j  as (coef, const)
        coef = tuple(Fraction(0) if i == j else -c[i] / c[j] for i in range(nvars))
        return coef, d / c[j]

    lbs = [bound(c, d) for c, d in lower]
    ubs = [bound(c, d) for c, d in upper]
    combined = list(rest)
    for lc, lk in lbs:
        for uc, uk in ubs:
            # L(x) < U(x)
            combined.append((tuple(u - l for u, l in zip(uc, lc)), lk - uk))

    x = _solve_strict(combined, nvars)
    if x is None:
        return None

    def ev(coef, const):
        return const + sum((a * b for a, b in zip(coef, x)), Fraction(0))

    lo = max((ev(*b) for b in lbs), default=None)
    hi = min((ev(*b) for b in ubs), default=None)
    x[j] = simplest_between(lo, hi)
    return x


def _solve(eqs: list[tuple[tuple[Fraction, ...], Fraction]], ineqs: list[_Strict], nvars: int):
    eqs = list(eqs)
    while eqs:
        a, b = eqs.pop(0)
        j = next((i for i, v in enumerate(a) if v != 0), None)
        if j is None:
            if b != 0:
                return None
            continue

        def sub(c, d, a=a, b=b, j=j):
            f = c[j] / a[j]
            if f == 0:
                return c, d
            return tuple(ci - f * ai for ci, ai in zip(c, a)), d - f * b

        eqs = [sub(c, d) for c, d in eqs]
        ineqs = [sub(c, d) for c, d in ineqs]
        x = _solve(eqs, ineqs, nvars)
        if x is None:
            return None
        x[j] = (b - sum((a[i] * x[i] for i in range(nvars) if i != j), Fraction(0))) / a[j]
        return x
    return _solve_strict(ineqs, nvars)


def feasible_witness(equalities, strict_inequalities, dim: int | None = None) -> Vector | None:
    """Decide ``{a·x = b} ∪ {a·x > b or a·x < b}`` exactly.

    ``equalities`` holds ``(a, b)`` pairs; ``strict_inequalities`` holds
    ``(a, b, side)`` triples with ``side`` +1 for ``a·x > b`` and -1 for
    ``a·x < b``.  Returns a rational point satisfying every constraint, or
    None when the system is infeasible.
    """
    rows = [a for a, _ in equalities] + [a for a, _, _ in strict_inequalities]
    if dim is None:
        if not rows:
            raise ValueError("dimension cannot be inferred from an empty system")
        dim = len(rows[0])
    if any(len(r) != dim for r in rows):
        raise ValueError("constraint vectors have inconsistent lengths")

    eqs = [(tuple(map(to_fraction, a)), to_fraction(b)) for a, b in equalities]
    ineqs: list[_Strict] = []
    for a, b, side in strict_inequalities:
        a = tuple(map(to_fraction, a))
        b = to_fraction(b)
        if side > 0:
            ineqs.append((a, b))
        elif side < 0:
            ineqs.append((tuple(-v for v in a), -b))
        else:
            raise ValueError("side must be +1 or -1; use equalities for 0")
    x = _solve(eqs, ineqs, dim)
    return None if x is None else tuple(x)
