"""Independent brute-force oracles for deriving expected test values.

Everything here recomputes results from definitions, sharing as little
as possible with the package's own algorithms: closures of generated
families instead of preorder rows, explicit history trees instead of
memoized positions.
"""

from __future__ import annotations

import itertools

from topogame.games import (
    FULL,
    GameKind,
    Move,
    Player,
    credit,
    judge,
    one_moves,
    two_moves,
)
from topogame.space import FiniteSpace, iter_points


def closure_by_union_intersection(masks: set[int]) -> set[int]:
    """Close a family of sets under pairwise union and intersection."""
    family = set(masks)
    grew = True
    while grew:
        grew = False
        pairs = list(family)
        for a in pairs:
            for b in pairs:
                for c in (a | b, a & b):
                    if c not in family:
                        family.add(c)
                        grew = True
    return family


def opens_from_minimal_nbhds(space: FiniteSpace) -> set[int]:
    """The topology generated by the minimal neighbourhoods."""
    return closure_by_union_intersection(set(space.up) | {0})


def downset_closure(space: FiniteSpace, a: int) -> int:
    """Closure computed pointwise from the relation, not from rows."""
    out = 0
    for x in range(space.n):
        for y in iter_points(a):
            if space.leq(x, y):
                out |= 1 << x
    return out


def brute_force_families(space: FiniteSpace) -> list[tuple[int, ...]]:
    """All nonempty families of nonempty opens, by powerset filter."""
    opens = [m for m in range(space.all_mask + 1) if m and space.is_open(m)]
    out = []
    for r in range(1, len(opens) + 1):
        out.extend(itertools.combinations(opens, r))
    return out


def brute_force_covers(space: FiniteSpace) -> list[tuple[int, ...]]:
    out = []
    for fam in brute_force_families(space):
        u = 0
        for m in fam:
            u |= m
        if u == space.all_mask:
            out.append(fam)
    return out


def brute_force_maximal_cellular(space: FiniteSpace) -> list[frozenset[int]]:
    out = []
    for fam in brute_force_families(space):
        used = 0
        disjoint = True
        for m in fam:
            if m & used:
                disjoint = False
                break
            used |= m
        if not disjoint:
            continue
        if any(
            m and space.is_open(m) and m & used == 0
            for m in range(space.all_mask + 1)
        ):
            continue
        out.append(frozenset(fam))
    return out


def history_tree_winner(
    space: FiniteSpace, kind: GameKind, horizon: int, history: tuple = ()
) -> Player:
    """Game value by explicit recursion over full histories.

    No position abstraction, no memo: the oracle against which the
    solver's state collapse is validated.  Exponential; keep to n <= 2
    and horizon <= 2.
    """
    inning = len(history) // 2
    if inning == horizon and len(history) % 2 == 0:
        accumulated = 0
        for i in range(horizon):
            accumulated |= credit(kind, history[2 * i], history[2 * i + 1])
        return judge(space, kind, accumulated)
    if len(history) % 2 == 0:
        moves: tuple[Move, ...] = one_moves(space, kind, FULL)
        outcomes = [
            history_tree_winner(space, kind, horizon, history + (m,)) for m in moves
        ]
        return Player.ONE if Player.ONE in outcomes else Player.TWO
    pending = history[-1]
    moves = two_moves(space, kind, pending, FULL)
    outcomes = [
        history_tree_winner(space, kind, horizon, history + (m,)) for m in moves
    ]
    return Player.TWO if Player.TWO in outcomes else Player.ONE


def product_opens_oracle(s: FiniteSpace, t: FiniteSpace) -> set[int]:
    """Opens of the product: all unions of open boxes U x V."""
    boxes = []
    for u in s.opens():
        for v in t.opens():
            box = 0
            for i in iter_points(u):
                box |= v << (i * t.n)
            boxes.append(box)
    unions = {0}
    for r in range(1, len(boxes) + 1):
        new = set()
        for u in unions:
            for b in boxes:
                new.add(u | b)
        if new <= unions:
            break
        unions |= new
    return unions
