"""Exact linear algebra over ``Fraction``."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vector = tuple[Fraction, ...]


def to_fraction(v) -> Fraction:
    """Accept ints, Fractions and strings like ``"3/4"`` or ``"-2"``."""
    if isinstance(v, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(v, float):
        raise TypeError("floats are not accepted; use an integer or a 'p/q' string")
    return Fraction(v)


def dot(a: Sequence[Fraction], x: Sequence[Fraction]) -> Fraction:
    return sum((ai * xi for ai, xi in zip(a, x)), Fraction(0))


def row_echelon(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = [list(map(Fraction, r)) for r in rows]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(row_echelon(rows)[1])


def kernel_vector(columns: Sequence[Sequence[Fraction]]) -> Vector | None:
    """A nonzero ``λ`` with ``Σ λ_j columns[j] = 0`` when the kernel is one
    dimensional, scaled so that its first nonzero entry is positive.  Returns
    None if the columns are independent."""
    if not columns:
        return None
    n = len(columns[0])
    k = len(columns)
    matrix = [[columns[j][i] for j in range(k)] for i in range(n)]
    red, pivots = row_echelon(matrix)
    free = [j for j in range(k) if j not in pivots]
    if not free:
        return None
    f = free[0]
    lam = [Fraction(0)] * k
    lam[f] = Fraction(1)
    for row, p in zip(red, pivots):
        lam[p] = -row[f]
    first = next(v for v in lam if v != 0)
    if first < 0:
        lam = [-v for v in lam]
    return tuple(lam)


def solve_affine(equalities: Sequence[tuple[Sequence[Fraction], Fraction]], dim: int) -> Vector | None:
    """A point of ``{x : a·x = b for all (a, b)}``, or None if empty."""
    if not equalities:
        return tuple(Fraction(0) for _ in range(dim))
    aug = [list(a) + [b] for a, b in equalities]
    red, pivots = row_echelon(aug)
    if dim in pivots:
        return None
    x = [Fraction(0)] * dim
    for row, p in zip(red, pivots):
        x[p] = row[dim]
    return tuple(x)


def intersection_dim(equalities: Sequence[tuple[Sequence[Fraction], Fraction]], dim: int) -> int | None:
    """Dimension of the affine solution set, or None if it is empty."""
    if solve_affine(equalities, dim) is None:
        return None
    return dim - rank([a for a, _ in equalities])
