import random
from itertools import combinations

from nbc_bijections.arrangement import om_from_vectors
from nbc_bijections.generators import random_matrix
from nbc_bijections.nbc import broken_circuits, contained_broken_circuit, enumerate_nbc, is_nbc
from nbc_bijections.om import Matroid, charvec_key

from oracles import minimal_dependent_sets, nbc_by_filter

U24 = Matroid.on(4, [set(c) for c in combinations(range(1, 5), 3)])


def fs(*xs):
    return frozenset(xs)


def test_broken_circuits_of_u24():
    bcs = broken_circuits(U24)
    assert len(bcs) == 4
    assert {b.elements for b in bcs} == {fs(1, 2), fs(1, 3), fs(2, 3)}
    for b in bcs:
        assert b.source_max == max(b.circuit)
        assert b.circuit in U24.circuits


def test_broken_circuits_degenerate():
    assert broken_circuits(Matroid.on(3, [])) == []
    (b,) = broken_circuits(Matroid.on(2, [{1}]))
    assert b.elements == frozenset() and b.source_max == 1


def test_is_nbc():
    assert is_nbc(U24, {2, 4})
    assert not is_nbc(U24, {1, 2})
    assert contained_broken_circuit(U24, {1, 2, 4}).elements == fs(1, 2)
    looped = Matroid.on(2, [{2}])
    assert not is_nbc(looped, set())
    assert not is_nbc(looped, {1})


def test_enumerate_nbc_example():
    got = enumerate_nbc(U24)
    assert set(got) == {fs(), fs(1), fs(2), fs(3), fs(4), fs(1, 4), fs(2, 4), fs(3, 4)}
    assert got == sorted(got, key=lambda s: charvec_key(s, range(1, 5)))


def test_enumerate_nbc_trivial_cases():
    assert len(enumerate_nbc(Matroid.on(2, []))) == 4
    assert enumerate_nbc(Matroid.on(3, [{1}, {2, 3}])) == []


def test_enumerate_nbc_matches_filter_and_is_independent():
    rng = random.Random(3)
    for _ in range(15):
        n, m = rng.randint(1, 3), rng.randint(1, 6)
        cols = random_matrix(rng, n, m, -2, 2)
        mat = om_from_vectors(cols).underlying
        circuits = minimal_dependent_sets(cols)
        got = enumerate_nbc(mat)
        assert set(got) == nbc_by_filter(m, circuits)
        assert len(got) == len(set(got))
        for s in got:
            assert not any(c <= s for c in circuits)
            for r in range(len(s)):
                assert all(frozenset(t) in set(got) for t in combinations(s, r))
