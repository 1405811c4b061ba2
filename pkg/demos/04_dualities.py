#!/usr/bin/env python3
# Strategy transduction between dual games.
#
# Winning strategies transfer constructively: a cover-selection strategy
# for two becomes a point-open strategy for one, open-open strategies
# convert to and from dense-selection strategies, and the cellular game
# bridges to the dense game through greedy refinements.  Every produced
# strategy is checked against all adversary plays.

from topogame import (
    OPEN_OPEN,
    POINT_OPEN,
    SEL_OD_OD,
    SEL_O_OD,
    Player,
    claim_open,
    claim_point,
    discrete,
    greedy_cellularity_strategy,
    oo_one_to_sel_two,
    points_of,
    sel_two_to_oo_one,
    sierpinski,
    solve,
    verify_winning,
    wl_to_pointopen,
)
from topogame.dualities import ALL_CONSTRUCTIONS

s = sierpinski()
d2 = discrete(2)

# The claim extractors: a point whose every neighbourhood the strategy
# can be provoked into selecting, and an open set all of whose open
# subsets are reachable replies.
greedy = greedy_cellularity_strategy(s, SEL_O_OD)
print("claim point for greedy on sierpinski:", claim_point(s, greedy, []))
greedy_d = greedy_cellularity_strategy(s, SEL_OD_OD)
print("claim open for greedy on sierpinski:", points_of(claim_open(s, greedy_d, [])))

# Cover-selection winner for two -> point-open winner for one, same horizon.
sigma = solve(d2, SEL_O_OD, 2).strategy
tau = wl_to_pointopen(d2, sigma, 2)
print(
    "\ntwo wins cover-selection on discrete(2) at h=2; transduced point-open "
    "strategy verified:",
    verify_winning(d2, POINT_OPEN, Player.ONE, tau, 2).ok,
)

# Open-open <-> dense-selection, both directions at once.
tau_oo = solve(discrete(3), OPEN_OPEN, 3).strategy
sigma_sel = oo_one_to_sel_two(discrete(3), tau_oo, 3)
print(
    "open-open one-strategy -> dense-selection two-strategy verified:",
    verify_winning(discrete(3), SEL_OD_OD, Player.TWO, sigma_sel, 3).ok,
)
back = sel_two_to_oo_one(discrete(3), solve(discrete(3), SEL_OD_OD, 3).strategy, 3)
print(
    "dense-selection two-strategy -> open-open one-strategy verified:",
    verify_winning(discrete(3), OPEN_OPEN, Player.ONE, back, 3).ok,
)

# All seven constructions over every 2-point space.
from topogame.spacegen import enumerate_topologies

print("\nall constructions on the four 2-point spaces, h = 1, 2:")
for entry in enumerate_topologies(2):
    for h in (1, 2):
        for name, src_kind, src_player, build, dst_kind, dst_player in ALL_CONSTRUCTIONS:
            result = solve(entry.space, src_kind, h)
            if result.winner is not src_player:
                continue
            out = build(entry.space, result.strategy, h)
            ok = verify_winning(entry.space, dst_kind, dst_player, out, h).ok
            print(f"  {entry.id} h={h} {name}: {'ok' if ok else 'FAILED'}")
