"""Property tests over random realizable oriented matroids and arrangements."""

from fractions import Fraction

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from nbc_bijections.arrangement import (
    Arrangement,
    Hyperplane,
    cone,
    count_regions,
    enumerate_affine_nbc,
    enumerate_regions,
    om_from_vectors,
    phi_backward,
    phi_forward,
)
from nbc_bijections.bijection import (
    enumerate_acyclic_reorientations,
    psi_backward,
    psi_forward,
    reachable_states,
    psi_inverse_step,
    psi_step,
)
from nbc_bijections.nbc import enumerate_nbc, is_nbc
from nbc_bijections.om import (
    contract_om,
    delete_om,
    is_acyclic,
    reorient,
    validate_om_axioms,
)

from conftest import as_tuple_arr
from oracles import zaslavsky_regions


@st.composite
def vector_configs(draw, max_n=3, max_m=6):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_m))
    entry = st.integers(-2, 2)
    return [tuple(draw(entry) for _ in range(n)) for _ in range(m)]


@st.composite
def oms(draw):
    return om_from_vectors(draw(vector_configs()))


@st.composite
def subsets_of(draw, ground):
    return frozenset(e for e in sorted(ground) if draw(st.booleans()))


@st.composite
def arrangements(draw, linear=False, max_n=2, max_m=4):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(0, max_m))
    q = st.integers(-2, 2).map(Fraction)
    hs = []
    for _ in range(m):
        normal = tuple(draw(q) for _ in range(n))
        assume(any(normal))
        hs.append(Hyperplane(normal, Fraction(0) if linear else draw(q)))
    return Arrangement(n, tuple(hs))


SETTINGS = settings(max_examples=60, deadline=None)


@SETTINGS
@given(oms(), st.data())
def test_minors_and_reorientation_stay_valid(om, data):
    a = data.draw(subsets_of(om.ground))
    x = data.draw(subsets_of(om.ground))
    y = data.draw(subsets_of(om.ground - x))
    for out in (reorient(om, a), delete_om(om, x), contract_om(om, x)):
        assert validate_om_axioms(out.circuits, out.ground)
        assert all(-c in out.circuits for c in out.circuits)
    assert reorient(reorient(om, a), a) == om
    assert reorient(om, a).underlying == om.underlying
    assert contract_om(delete_om(om, x), y) == delete_om(contract_om(om, y), x)


@SETTINGS
@given(oms())
def test_nbc_sets_are_independent_and_closed_downward(om):
    nbc = set(enumerate_nbc(om.underlying))
    for s in nbc:
        assert not any(c <= s for c in om.underlying.circuits)
        for e in s:
            assert s - {e} in nbc
    assert all(is_nbc(om.underlying, s) for s in nbc)


@SETTINGS
@given(oms())
def test_psi_is_a_bijection(om):
    acyclic = enumerate_acyclic_reorientations(om)
    nbc = enumerate_nbc(om.underlying)
    assert len(acyclic) == len(nbc)
    images = [psi_forward(om, a) for a in acyclic]
    assert sorted(images, key=sorted) == sorted(nbc, key=sorted)
    assert all(psi_backward(om, n) == a for a, n in zip(acyclic, images))


@settings(max_examples=30, deadline=None)
@given(oms())
def test_psi_steps_are_mutually_inverse(om):
    for level in reachable_states(om):
        for s in level:
            if s.k < om.size:
                assert psi_inverse_step(om, psi_step(om, s)) == s
            if s.k > 0:
                assert psi_step(om, psi_inverse_step(om, s)) == s


@SETTINGS
@given(oms(), st.data())
def test_contraction_acyclic_implies_acyclic(om, data):
    a = data.draw(subsets_of(om.ground))
    m = reorient(om, a)
    for e in m.ground:
        if any(c.support == {e} for c in m.circuits):
            continue
        if is_acyclic(contract_om(m, {e})):
            assert is_acyclic(m)


@SETTINGS
@given(arrangements())
def test_phi_is_a_bijection(arr):
    regions = enumerate_regions(arr)
    nbc = enumerate_affine_nbc(arr)
    assert len(regions) == len(nbc) == zaslavsky_regions(as_tuple_arr(arr))
    images = [phi_forward(arr, r) for r in regions]
    assert sorted(images, key=sorted) == sorted(nbc, key=sorted)
    for r, b in zip(regions, images):
        assert phi_backward(arr, b) == r


@SETTINGS
@given(arrangements())
def test_intermediate_sums(arr):
    total = count_regions(arr)
    nbc = enumerate_affine_nbc(arr)
    for k in range(arr.size + 1):
        later = range(k + 1, arr.size + 1)
        assert sum(count_regions(arr, b, later) for b in nbc if all(i <= k for i in b)) == total


@SETTINGS
@given(arrangements())
def test_coning_correspondence(arr):
    c = cone(arr)
    k0 = arr.size + 1
    cone_nbc = set(enumerate_affine_nbc(c))
    affine = set(enumerate_affine_nbc(arr))
    for s in map(frozenset, _all_subsets(arr.size)):
        assert (s in affine) == (s in cone_nbc and s | {k0} in cone_nbc)


def _all_subsets(m):
    for mask in range(1 << m):
        yield {i + 1 for i in range(m) if mask >> i & 1}


@SETTINGS
@given(arrangements(linear=True, max_n=3))
def test_regions_match_acyclic_reorientations(arr):
    om = om_from_vectors([h.normal for h in arr.hyperplanes])
    got = sorted((frozenset(i + 1 for i, s in enumerate(r.signs) if s == -1) for r in enumerate_regions(arr)), key=sorted)
    assert got == sorted(enumerate_acyclic_reorientations(om), key=sorted)
