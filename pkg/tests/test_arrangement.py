import random
from fractions import Fraction as F

import pytest

from nbc_bijections.arrangement import (
    Arrangement,
    Hyperplane,
    affine_circuits,
    affine_nbc_obstruction,
    cone,
    decone,
    enumerate_affine_nbc,
    is_affine_nbc,
    om_from_linear_arrangement,
    permute_arrangement,
)
from nbc_bijections.bijection import enumerate_acyclic_reorientations
from nbc_bijections.arrangement.regions import count_regions
from nbc_bijections.generators import random_arrangement
from nbc_bijections.om import MalformedInputError, SignedSubset, charvec_key, validate_om_axioms

from conftest import as_tuple_arr
from golden import FIGURE_LABELS
from oracles import affine_circuits as oracle_circuits
from oracles import affine_nbc as oracle_nbc


def fs(*xs):
    return frozenset(xs)


def test_hyperplane_rejects_zero_normal():
    with pytest.raises(MalformedInputError):
        Hyperplane((0, 0), 1)


def test_hyperplane_sides():
    h = Hyperplane((1, 1), 1)
    assert h.side((F(1), F(1))) == 1
    assert h.side((F(0), F(0))) == -1
    assert h.side((F(1), F(0))) == 0


def test_example_circuits(ex34):
    assert affine_circuits(ex34) == [fs(1, 2, 3)]


def test_parallel_and_duplicate_circuits():
    parallel = Arrangement.from_rows(2, [((1, 0), 0), ((2, 0), 1)])
    assert affine_circuits(parallel) == []
    dup = Arrangement.from_rows(2, [((1, 0), 1), ((-2, 0), -2)])
    assert affine_circuits(dup) == [fs(1, 2)]
    # the broken circuit drops the maximum, so the earlier copy is excluded
    assert enumerate_affine_nbc(dup) == [fs(), fs(2)]


def test_example_nbc(ex34):
    got = enumerate_affine_nbc(ex34)
    assert set(got) == set(FIGURE_LABELS.values())
    assert len(got) == 10
    assert got == sorted(got, key=lambda s: charvec_key(s, range(1, 5)))


def test_single_hyperplane_nbc():
    arr = Arrangement.from_rows(3, [((1, 2, 3), 4)])
    assert enumerate_affine_nbc(arr) == [fs(), fs(1)]


def test_generic_arrangement_nbc_is_all_intersecting_sets():
    arr = Arrangement.from_rows(2, [((1, 0), 0), ((0, 1), 0), ((1, 1), 5)])
    assert set(enumerate_affine_nbc(arr)) == {fs(), fs(1), fs(2), fs(3), fs(1, 2), fs(1, 3), fs(2, 3)}


def test_obstructions(ex34):
    assert "broken circuit H1,H2" in affine_nbc_obstruction(ex34, {1, 2})
    parallel = Arrangement.from_rows(2, [((1, 0), 0), ((1, 0), 1)])
    assert "empty intersection" in affine_nbc_obstruction(parallel, {1, 2})
    assert is_affine_nbc(ex34, {2, 4})


def test_against_brute_force_definition():
    rng = random.Random(21)
    for t in range(25):
        arr = random_arrangement(rng, rng.randint(1, 3), rng.randint(1, 5), parallel=t % 3 == 0, duplicate=t % 4 == 0)
        plain = as_tuple_arr(arr)
        assert set(affine_circuits(arr)) == oracle_circuits(plain)
        assert set(enumerate_affine_nbc(arr)) == oracle_nbc(plain)


def test_om_from_linear_arrangement():
    arr = Arrangement.from_rows(2, [((0, 1), 0), ((1, -1), 0), ((1, 0), 0)])
    om = om_from_linear_arrangement(arr)
    x = SignedSubset.of([1, 2], [3])
    assert om.circuits == {x, -x}
    par = om_from_linear_arrangement(Arrangement.from_rows(2, [((1, 1), 0), ((2, 2), 0)]))
    assert par.circuits == {SignedSubset.of([1], [2]), SignedSubset.of([2], [1])}


def test_om_from_affine_rejected(ex34):
    with pytest.raises(MalformedInputError, match="not linear"):
        om_from_linear_arrangement(ex34)


def test_cone(ex34):
    c = cone(ex34)
    assert c.dim == 3 and c.size == 5 and c.is_linear()
    assert c[4].normal == (1, 1, -1)
    assert c[5].normal == (0, 0, 1)
    assert decone(c) == ex34
    lin = Arrangement.from_rows(2, [((1, 2), 0)])
    assert cone(lin)[1].normal == (1, 2, 0)


def test_cone_om_counts(ex34):
    c = cone(ex34)
    om = om_from_linear_arrangement(c)
    assert validate_om_axioms(om.circuits, 5)
    assert len(enumerate_acyclic_reorientations(om)) == count_regions(c) == 20


def test_permute(ex34):
    p = permute_arrangement(ex34, [4, 3, 2, 1])
    assert p[1] == ex34[4] and p[4] == ex34[1]
