"""Brute-force reference implementations written from the definitions.

Nothing here imports the package; tests compare the library against these.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import chain, combinations, product


def subsets(items):
    items = list(items)
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def rank(rows) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    r = 0
    for c in range(len(m[0])):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def minimal_dependent_sets(vectors) -> list[frozenset[int]]:
    """Circuits of the column matroid, 1-based."""
    m = len(vectors)
    out = []
    for s in subsets(range(1, m + 1)):
        if not s:
            continue
        if rank([vectors[i - 1] for i in s]) == len(s):
            continue
        if all(rank([vectors[i - 1] for i in t]) == len(t) for t in combinations(s, len(s) - 1)):
            out.append(frozenset(s))
    return out


def nbc_by_filter(m: int, circuits) -> set[frozenset[int]]:
    broken = [frozenset(c) - {max(c)} for c in circuits]
    return {frozenset(s) for s in subsets(range(1, m + 1)) if not any(b <= set(s) for b in broken)}


# -------------------------------------------------------------- arrangements
# an arrangement here is (dim, [(normal, offset), ...])


def _eqs(arr, s):
    return [list(arr[1][i - 1][0]) + [arr[1][i - 1][1]] for i in s]


def meets(arr, s) -> bool:
    """``∩s`` is nonempty (the empty intersection is the whole space)."""
    s = list(s)
    if not s:
        return True
    normals = [list(arr[1][i - 1][0]) for i in s]
    return rank(normals) == rank(_eqs(arr, s))


def normal_rank(arr, s) -> int:
    return rank([list(arr[1][i - 1][0]) for i in s])


def affine_circuits(arr) -> set[frozenset[int]]:
    n, hs = arr
    dep = [
        frozenset(s)
        for s in subsets(range(1, len(hs) + 1))
        if s and meets(arr, s) and (n - normal_rank(arr, s)) + len(s) >= n + 1
    ]
    # minimal dependent intersecting sets have dim(∩S) + |S| = n + 1 exactly
    return {s for s in dep if not any(t < s for t in dep)}


def affine_nbc(arr) -> set[frozenset[int]]:
    broken = [c - {max(c)} for c in affine_circuits(arr)]
    return {
        frozenset(s)
        for s in subsets(range(1, len(arr[1]) + 1))
        if meets(arr, s) and not any(b <= set(s) for b in broken)
    }


def zaslavsky_regions(arr, flat=(), among=None) -> int:
    """Regions of ``among`` restricted to ``∩flat``, by the Whitney-Zaslavsky sum
    over intersecting subsets (valid for multisets of hyperplanes)."""
    n, hs = arr
    flat = tuple(flat)
    among = range(1, len(hs) + 1) if among is None else among
    assert meets(arr, flat)
    base = normal_rank(arr, flat)
    cutting = []
    for i in among:
        if not meets(arr, flat + (i,)):
            continue
        if normal_rank(arr, flat + (i,)) == base:
            continue  # contains the flat
        cutting.append(i)
    total = 0
    for t in subsets(cutting):
        if meets(arr, flat + t):
            total += (-1) ** (len(t) - (normal_rank(arr, flat + t) - base))
    return total


def acyclic_count(vectors) -> int:
    """|A(M)| for a vector configuration: regions of the central arrangement
    with these normals, or 0 if some vector is zero (a loop)."""
    if any(all(x == 0 for x in v) for v in vectors):
        return 0
    if not vectors:
        return 1
    n = len(vectors[0])
    return zaslavsky_regions((n, [(tuple(v), 0) for v in vectors]))


def planar_grid_regions(arr, radius: int = 6, step: Fraction = Fraction(1, 5)) -> set[tuple[int, ...]]:
    """Sign vectors of grid points avoiding every line; a lower bound on the
    set of regions, exact for small arrangements with a fine enough grid."""
    n, hs = arr
    assert n == 2
    found = set()
    k = int(radius / step)
    for a, b in product(range(-k, k + 1), repeat=2):
        x, y = a * step + Fraction(1, 1000), b * step + Fraction(1, 997)
        vals = [nx * x + ny * y - off for (nx, ny), off in hs]
        if all(v != 0 for v in vals):
            found.add(tuple(1 if v > 0 else -1 for v in vals))
    return found
