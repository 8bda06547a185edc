import random

import pytest

from nbc_bijections.arrangement import (
    Arrangement,
    ArrContractViolation,
    ArrPairState,
    cone,
    enumerate_affine_nbc,
    enumerate_regions,
    make_cell,
    om_from_linear_arrangement,
    phi_backward,
    phi_backward_trace,
    phi_forward,
    phi_inverse_step,
    phi_step,
    phi_step_case,
    phi_trace,
    reachable_arr_states,
    region_from_signs,
    region_to_reorientation,
    tau,
)
from nbc_bijections.arrangement.phi import check_arr_state
from nbc_bijections.bijection import check_state, enumerate_acyclic_reorientations, psi_step
from nbc_bijections.generators import random_arrangement

from golden import FIGURE_LABELS, PHI_CASES, PHI_TRACE

DELTA0 = (-1, 1, 1, 1)


def test_worked_trace(ex34):
    states, cases = phi_trace(ex34, region_from_signs(ex34, DELTA0))
    assert [(s.nbc_part, s.region.signs) for s in states] == PHI_TRACE
    assert cases == PHI_CASES
    for s in states:
        check_arr_state(ex34, s)


def test_step_cases_individually(ex34):
    states, _ = phi_trace(ex34, region_from_signs(ex34, DELTA0))
    for k, case in enumerate(PHI_CASES, 1):
        nxt, c = phi_step_case(ex34, states[k - 1])
        assert (nxt, c) == (states[k], case)
        assert phi_step(ex34, states[k - 1]) == states[k]


def test_step_two_lands_on_half_line(ex34):
    states, _ = phi_trace(ex34, region_from_signs(ex34, DELTA0))
    w = states[2].region.witness
    # the open half line of x = y with x > 0 and x + y > 1
    assert w[0] == w[1] and w[0] > 0 and w[0] + w[1] > 1


def test_figure_labels(ex34):
    got = {r.signs: phi_forward(ex34, r) for r in enumerate_regions(ex34)}
    assert got == FIGURE_LABELS


def test_backward(ex34):
    assert phi_backward(ex34, {2, 4}).signs == DELTA0
    assert phi_backward(ex34, set()).signs == (-1, -1, -1, -1)
    with pytest.raises(ArrContractViolation, match="broken circuit"):
        phi_backward(ex34, {1, 2})
    for nbc in enumerate_affine_nbc(ex34):
        assert phi_forward(ex34, phi_backward(ex34, nbc)) == nbc


def test_inverse_step_from_point(ex34):
    forward, _ = phi_trace(ex34, region_from_signs(ex34, DELTA0))
    top = forward[4]
    prev = phi_inverse_step(ex34, top)
    assert prev == forward[3]
    assert [s for s in phi_backward_trace(ex34, {2, 4})] == forward


def test_inverse_step_region_missing_hyperplane():
    # two parallel lines: on the flat x = 0, the line x = 1 is out of reach
    arr = Arrangement.from_rows(2, [((1, 0), 0), ((1, 0), 1)])
    s = ArrPairState(2, frozenset({1}), make_cell(arr, {1}, (), (0, 0)))
    prev = phi_inverse_step(arr, s)
    assert prev.nbc_part == {1} and prev.k == 1


def test_invalid_states_rejected(ex34):
    cell = region_from_signs(ex34, DELTA0)
    with pytest.raises(ArrContractViolation):
        phi_step(ex34, ArrPairState(0, frozenset({1}), cell))
    with pytest.raises(ArrContractViolation):
        phi_inverse_step(ex34, ArrPairState(0, frozenset(), cell))
    with pytest.raises(ArrContractViolation, match="broken circuit H1,H2"):
        phi_backward(ex34, {1, 2, 3})


def test_region_to_reorientation():
    arr = Arrangement.from_rows(2, [((1, 0), 0), ((0, 1), 0), ((1, 1), 0)])
    assert region_to_reorientation(arr, region_from_signs(arr, (1, 1, 1))) == frozenset()
    assert region_to_reorientation(arr, region_from_signs(arr, (-1, 1, 1))) == {1}


def test_region_reorientation_bijection():
    rng = random.Random(4)
    for _ in range(8):
        arr = random_arrangement(rng, rng.randint(2, 3), rng.randint(2, 5), linear=True)
        om = om_from_linear_arrangement(arr)
        images = [region_to_reorientation(arr, r) for r in enumerate_regions(arr)]
        assert sorted(images, key=sorted) == sorted(enumerate_acyclic_reorientations(om), key=sorted)
        assert len(set(images)) == len(images)


def test_tau(ex34):
    c = cone(ex34)
    om = om_from_linear_arrangement(c)
    for r in enumerate_regions(c):
        states, _ = phi_trace(c, r)
        t0 = tau(c, states[0])
        assert t0.reorient_part == region_to_reorientation(c, r)
        for k in range(1, c.size + 1):
            tk = tau(c, states[k])
            check_state(om, tk)
            assert tk == psi_step(om, tau(c, states[k - 1]))
    with pytest.raises(ArrContractViolation):
        tau(ex34, phi_backward_trace(ex34, set())[0])


def test_tau_state_with_single_flat():
    c = cone(Arrangement.from_rows(2, [((0, 1), 0), ((1, -1), 0)]))
    s = phi_backward_trace(c, {2})[2]
    assert tau(c, s).nbc_part == {2}


def test_reachable_states_round_trip(ex34):
    for level in reachable_arr_states(ex34)[1:]:
        for s in level:
            check_arr_state(ex34, s)
            prev = phi_inverse_step(ex34, s)
            assert phi_step(ex34, prev) == s
