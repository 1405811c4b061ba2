"""Workbench for topological selection games on finite spaces.

Finite topologies are specialization preorders; the package computes
their cardinal invariants, solves the selection, open-open and
point-open games exactly at bounded horizon, verifies strategies against
every adversary play, and carries out the constructive strategy
transductions between the dual games.
"""

from .space import (
    FiniteSpace,
    canonical_family,
    delta_space,
    disjoint_sum,
    enumerate_covers,
    enumerate_dense_families,
    enumerate_maximal_cellular,
    enumerate_opens,
    is_regular,
    mask_of,
    maximal_disjoint_refinement,
    points_of,
    product,
    space_from_json,
    space_to_json,
)
from .invariants import InvariantReport, cellularity, density, pi_character, pi_weight, report, wl_degree
from .games import (
    FULL,
    OPEN_OPEN,
    POINT_OPEN,
    REDUCED,
    SEL_C_OD,
    SEL_O_OD,
    SEL_OD_OD,
    FamilyMove,
    FinSelMove,
    GameKind,
    PickMove,
    Player,
    PointMove,
    Strategy,
    Transcript,
    greedy_cellularity_strategy,
    legal_moves,
    minimal_winning_horizon,
    parse_kind,
    play,
    sel_fin,
    solve,
    verify_winning,
)
from .dualities import (
    claim_open,
    claim_point,
    cod_to_odod_two,
    odod_to_cod_one,
    oo_one_to_sel_two,
    oo_two_to_sel_one,
    sel_one_to_oo_two,
    sel_two_to_oo_one,
    wl_to_pointopen,
)
from .spacegen import (
    chain,
    discrete,
    enumerate_topologies,
    fan,
    indiscrete,
    named,
    partition_space,
    random_space,
    sierpinski,
    space_id,
)

__version__ = "0.1.0"
