#!/usr/bin/env python3
# Playing and solving the games.
#
# Six games, all run for exactly h innings.  In the selection games
# player two tries to make their selections dense; in open-open and
# point-open the roles flip and player one is the density side.

from topogame import (
    OPEN_OPEN,
    POINT_OPEN,
    SEL_O_OD,
    FamilyMove,
    PickMove,
    Player,
    PointMove,
    canonical_family,
    discrete,
    fan,
    greedy_cellularity_strategy,
    mask_of,
    minimal_winning_horizon,
    play,
    sierpinski,
    solve,
    verify_winning,
)
from topogame.games import ScriptedStrategy
from topogame.invariants import cellularity, wl_degree

s = sierpinski()
d3 = discrete(3)

# Exact winners by backward induction.
for h in (1, 2, 3):
    print(f"open-open on discrete(3), horizon {h}:", solve(d3, OPEN_OPEN, h).winner.value)

# Minimal winning horizons line up with the invariants.
print("\nminimal horizons on discrete(3):")
print("  two in cover-selection:", minimal_winning_horizon(d3, SEL_O_OD, Player.TWO, 5))
print("  one in point-open:     ", minimal_winning_horizon(d3, POINT_OPEN, Player.ONE, 5))
print("  wl_degree:             ", wl_degree(d3))

# The two clusters can differ: on the fan, covers must include the whole
# space (wl 1) but open-open still takes one inning per top point.
f2 = fan(2)
print("\nfan(2): wl_degree", wl_degree(f2),
      "| open-open horizon", minimal_winning_horizon(f2, OPEN_OPEN, Player.ONE, 5))

# A full transcript: player one offers a cover, greedy player two chases
# a witness disjoint from everything selected so far.
cover = FamilyMove(canonical_family([mask_of([1]), mask_of([0, 1])]))
one = ScriptedStrategy(SEL_O_OD, Player.ONE, [cover])
t = play(s, SEL_O_OD, one, greedy_cellularity_strategy(s, SEL_O_OD), 1)
print("\ncover-selection transcript on sierpinski:")
import json

print(json.dumps(t.to_json(), indent=2))

# The greedy strategy wins within cellularity-many innings, verified
# against every adversary line.
bound = cellularity(d3)
g = greedy_cellularity_strategy(d3, SEL_O_OD)
print(
    f"\ngreedy wins cover-selection on discrete(3) within h={bound}:",
    verify_winning(d3, SEL_O_OD, Player.TWO, g, bound).ok,
)
print(
    f"and cannot do it in {bound - 1}:",
    not verify_winning(d3, SEL_O_OD, Player.TWO, g, bound - 1).ok,
)

# Verification produces concrete counterexamples.
lazy = ScriptedStrategy(POINT_OPEN, Player.ONE, [PointMove(0), PointMove(0)])
bad = verify_winning(discrete(2), POINT_OPEN, Player.ONE, lazy, 2)
print("\nrepeating the same point in point-open loses; counterexample winner:",
      bad.counterexample.winner.value)
