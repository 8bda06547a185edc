from .core import (
    Arrangement,
    Hyperplane,
    affine_broken_circuits,
    affine_circuits,
    affine_nbc_obstruction,
    cone,
    decone,
    enumerate_affine_nbc,
    fmt_hset,
    is_affine_nbc,
    om_from_linear_arrangement,
    om_from_vectors,
    permute_arrangement,
)
from .feasibility import feasible_witness, simplest_between
from .phi import (
    ArrContractViolation,
    ArrPairState,
    check_arr_state,
    initial_arr_state,
    phi_backward,
    phi_backward_trace,
    phi_forward,
    phi_inverse_step,
    phi_step,
    phi_step_case,
    phi_trace,
    reachable_arr_states,
    region_to_reorientation,
    tau,
)
from .regions import (
    RegionCell,
    RegionError,
    count_regions,
    enumerate_regions,
    format_signs,
    make_cell,
    parse_signs,
    region_from_signs,
)
