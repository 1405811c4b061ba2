"""The selection and open-picking games: definitions, play, exact solving,
and exhaustive strategy verification.

Six game kinds run for exactly ``horizon`` innings.  In the selection
kinds player one offers a family and player two selects from it, trying
to make the union of selections dense.  In the open-open game player one
offers a nonempty open and player two shrinks it; in the point-open game
player one names points and player two covers them; in both of those
player one is the side rooting for density.

Positions collapse to (inning, accumulated union, pending move): in every
supported kind the legal moves depend only on the pending move and the
winning predicate only on the accumulated union, so that triple is a
sound minimax key and the doubly-exponential history tree never
materializes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Hashable, Iterator, NamedTuple, Sequence, Union

from .space import (
    FiniteSpace,
    OpenFamily,
    canonical_family,
    enumerate_covers,
    enumerate_dense_families,
    enumerate_maximal_cellular,
    family_key,
    family_to_json,
    is_maximal_cellular,
    iter_points,
    pointset_to_json,
)

FULL = "full"
REDUCED = "reduced"


class Player(str, Enum):
    ONE = "one"
    TWO = "two"

    def other(self) -> "Player":
        return Player.TWO if self is Player.ONE else Player.ONE


class Tag(str, Enum):
    SEL_O_OD = "sel-o-od"
    SEL_C_OD = "sel-c-od"
    SEL_OD_OD = "sel-od-od"
    SEL_FIN = "sel-fin"
    OPEN_OPEN = "oo"
    POINT_OPEN = "po"


SELECTION_TAGS = (Tag.SEL_O_OD, Tag.SEL_C_OD, Tag.SEL_OD_OD, Tag.SEL_FIN)


class GameError(Exception):
    pass


class UnsupportedGameError(GameError):
    pass


class IllegalMoveError(GameError):
    def __init__(self, inning: int, mover: Player, move: "Move", history=None):
        self.inning = inning
        self.mover = mover
        self.move = move
        self.history = history
        super().__init__(
            f"illegal move by player {mover.value} at inning {inning}: {move!r}"
        )


@dataclass(frozen=True)
class GameKind:
    tag: Tag
    cap: int | None = None

    def __post_init__(self):
        if self.tag is Tag.SEL_FIN:
            if self.cap is None:
                raise UnsupportedGameError(
                    "the finite-selection game needs an explicit selection-size "
                    "cap: without one player two can select whole covers and "
                    "wins trivially on any finite space"
                )
            if self.cap < 1:
                raise UnsupportedGameError("selection cap must be >= 1")
        elif self.cap is not None:
            raise UnsupportedGameError(f"{self.tag.value} does not take a cap")

    @property
    def is_selection(self) -> bool:
        return self.tag in SELECTION_TAGS

    def density_player(self) -> Player:
        """The side that wins when the accumulated union ends up dense."""
        return Player.TWO if self.is_selection else Player.ONE

    def label(self) -> str:
        return f"{self.tag.value}:{self.cap}" if self.cap else self.tag.value


SEL_O_OD = GameKind(Tag.SEL_O_OD)
SEL_C_OD = GameKind(Tag.SEL_C_OD)
SEL_OD_OD = GameKind(Tag.SEL_OD_OD)
OPEN_OPEN = GameKind(Tag.OPEN_OPEN)
POINT_OPEN = GameKind(Tag.POINT_OPEN)


def sel_fin(cap: int) -> GameKind:
    return GameKind(Tag.SEL_FIN, cap)


def parse_kind(text: str) -> GameKind:
    """Parse CLI notation: sel-o-od, sel-c-od, sel-od-od, sel-fin:k, oo, po."""
    if text.startswith("sel-fin"):
        _, _, cap = text.partition(":")
        if not cap:
            raise UnsupportedGameError("sel-fin needs a cap, e.g. sel-fin:2")
        return sel_fin(int(cap))
    try:
        return GameKind(Tag(text))
    except ValueError:
        raise UnsupportedGameError(f"unknown game kind {text!r}") from None


# -- moves -------------------------------------------------------------------


class FamilyMove(NamedTuple):
    """Player one's move in the selection games: an open family."""

    sets: OpenFamily


class PickMove(NamedTuple):
    """A single open set: two's selection, or either move in open-open,
    or two's covering reply in point-open."""

    open_set: int


class PointMove(NamedTuple):
    """Player one's move in the point-open game."""

    point: int


class FinSelMove(NamedTuple):
    """Player two's move in the finite-selection game: a subfamily."""

    sets: OpenFamily


Move = Union[FamilyMove, PickMove, PointMove, FinSelMove]


class Position(NamedTuple):
    inning: int
    accumulated: int
    pending: Move | None


def move_to_json(move: Move) -> dict:
    if isinstance(move, FamilyMove):
        return {"type": "family", "sets": family_to_json(move.sets)}
    if isinstance(move, FinSelMove):
        return {"type": "finsel", "sets": family_to_json(move.sets)}
    if isinstance(move, PickMove):
        return {"type": "pick", "set": pointset_to_json(move.open_set)}
    if isinstance(move, PointMove):
        return {"type": "point", "point": move.point}
    raise GameError(f"not a move: {move!r}")


def move_from_json(doc: dict) -> Move:
    t = doc.get("type")
    if t == "family":
        return FamilyMove(canonical_family(_mask(s) for s in doc["sets"]))
    if t == "finsel":
        return FinSelMove(canonical_family(_mask(s) for s in doc["sets"]))
    if t == "pick":
        return PickMove(_mask(doc["set"]))
    if t == "point":
        return PointMove(int(doc["point"]))
    raise GameError(f"unknown move type {t!r}")


def _mask(points: Sequence[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << int(p)
    return m


# -- cached per-space move tables ---------------------------------------------


@lru_cache(maxsize=None)
def covers(space: FiniteSpace) -> tuple[OpenFamily, ...]:
    return tuple(sorted(enumerate_covers(space), key=family_key))


@lru_cache(maxsize=None)
def dense_families(space: FiniteSpace) -> tuple[OpenFamily, ...]:
    return tuple(sorted(enumerate_dense_families(space), key=family_key))


@lru_cache(maxsize=None)
def maximal_cellular_families(space: FiniteSpace) -> tuple[OpenFamily, ...]:
    return tuple(sorted(enumerate_maximal_cellular(space), key=family_key))


@lru_cache(maxsize=None)
def minimal_nbhd_dense_families(space: FiniteSpace) -> tuple[OpenFamily, ...]:
    """Dense-union families whose members are minimal neighbourhoods.

    Every dense family is refined by one of these with the same union
    (take the minimal neighbourhoods of the points it covers), which is
    what makes them a sound reduced move set for player one.
    """
    nbhds = canonical_family(space.up)
    out = []
    for r in range(1, len(nbhds) + 1):
        for fam in itertools.combinations(nbhds, r):
            u = 0
            for m in fam:
                u |= m
            if space.is_dense(u):
                out.append(tuple(fam))
    return tuple(sorted(out, key=family_key))


@lru_cache(maxsize=None)
def one_moves(space: FiniteSpace, kind: GameKind, mode: str = FULL) -> tuple[Move, ...]:
    """Player one's legal moves; position-independent in every kind.

    Reduced mode shrinks the set to a dominance-closed core that provably
    preserves the solver's winner (never used by the verifier):

    * weak-Lindelof selection and finite-selection: only the cover of
      minimal neighbourhoods, which refines every cover;
    * dense-dense selection: only dense families of minimal
      neighbourhoods, which refine every dense family.
    """
    tag = kind.tag
    if tag in (Tag.SEL_O_OD, Tag.SEL_FIN):
        if mode == REDUCED:
            return (FamilyMove(space.minimal_nbhd_cover()),)
        return tuple(FamilyMove(f) for f in covers(space))
    if tag is Tag.SEL_C_OD:
        return tuple(FamilyMove(f) for f in maximal_cellular_families(space))
    if tag is Tag.SEL_OD_OD:
        if mode == REDUCED:
            return tuple(FamilyMove(f) for f in minimal_nbhd_dense_families(space))
        return tuple(FamilyMove(f) for f in dense_families(space))
    if tag is Tag.OPEN_OPEN:
        return tuple(PickMove(m) for m in space.nonempty_opens())
    if tag is Tag.POINT_OPEN:
        return tuple(PointMove(x) for x in range(space.n))
    raise UnsupportedGameError(str(kind))


def two_moves(
    space: FiniteSpace, kind: GameKind, pending: Move, mode: str = FULL
) -> tuple[Move, ...]:
    """Player two's legal replies to a pending move.

    Reduced mode keeps only minimal neighbourhoods in open-open and
    point-open (the smallest legal replies, which is all the
    density-averse player needs), and only maximum-size subfamilies in
    finite selection (the density-seeking player never wants fewer).
    """
    tag = kind.tag
    if tag in (Tag.SEL_O_OD, Tag.SEL_C_OD, Tag.SEL_OD_OD):
        assert isinstance(pending, FamilyMove)
        return tuple(PickMove(m) for m in pending.sets)
    if tag is Tag.SEL_FIN:
        assert isinstance(pending, FamilyMove)
        assert kind.cap is not None
        members = pending.sets
        if mode == REDUCED:
            sizes: Sequence[int] = (min(kind.cap, len(members)),)
        else:
            sizes = range(1, min(kind.cap, len(members)) + 1)
        out = []
        for r in sizes:
            out.extend(FinSelMove(sub) for sub in itertools.combinations(members, r))
        return tuple(out)
    if tag is Tag.OPEN_OPEN:
        assert isinstance(pending, PickMove)
        inside = pending.open_set
        if mode == REDUCED:
            return tuple(
                PickMove(m)
                for m in canonical_family(space.up[x] for x in iter_points(inside))
            )
        return tuple(
            PickMove(m) for m in space.nonempty_opens() if m & ~inside == 0
        )
    if tag is Tag.POINT_OPEN:
        assert isinstance(pending, PointMove)
        x = pending.point
        if mode == REDUCED:
            return (PickMove(space.up[x]),)
        return tuple(
            PickMove(m)
            for m in space.nonempty_opens()
            if m >> x & 1
        )
    raise UnsupportedGameError(str(kind))


def credit(kind: GameKind, one_move: Move, two_move: Move) -> int:
    """The open set an inning contributes to the accumulated union."""
    if isinstance(two_move, FinSelMove):
        u = 0
        for m in two_move.sets:
            u |= m
        return u
    if isinstance(two_move, PickMove):
        return two_move.open_set
    raise GameError(f"player two cannot move {two_move!r}")


def is_legal(
    space: FiniteSpace, kind: GameKind, pending: Move | None, move: Move, mover: Player
) -> bool:
    """Structural legality check, independent of move-set enumeration."""
    tag = kind.tag
    if mover is Player.ONE:
        if tag in (Tag.SEL_O_OD, Tag.SEL_FIN):
            return _legal_family(space, move) and _family_union(move) == space.all_mask
        if tag is Tag.SEL_C_OD:
            return isinstance(move, FamilyMove) and is_maximal_cellular(
                space, move.sets
            )
        if tag is Tag.SEL_OD_OD:
            return _legal_family(space, move) and space.is_dense(_family_union(move))
        if tag is Tag.OPEN_OPEN:
            return (
                isinstance(move, PickMove)
                and move.open_set != 0
                and space.is_open(move.open_set)
            )
        if tag is Tag.POINT_OPEN:
            return isinstance(move, PointMove) and 0 <= move.point < space.n
        return False
    # player two replies
    if pending is None:
        return False
    if tag in (Tag.SEL_O_OD, Tag.SEL_C_OD, Tag.SEL_OD_OD):
        assert isinstance(pending, FamilyMove)
        return isinstance(move, PickMove) and move.open_set in pending.sets
    if tag is Tag.SEL_FIN:
        assert isinstance(pending, FamilyMove)
        assert kind.cap is not None
        return (
            isinstance(move, FinSelMove)
            and 1 <= len(move.sets) <= kind.cap
            and len(set(move.sets)) == len(move.sets)
            and all(m in pending.sets for m in move.sets)
        )
    if tag is Tag.OPEN_OPEN:
        assert isinstance(pending, PickMove)
        return (
            isinstance(move, PickMove)
            and move.open_set != 0
            and space.is_open(move.open_set)
            and move.open_set & ~pending.open_set == 0
        )
    if tag is Tag.POINT_OPEN:
        assert isinstance(pending, PointMove)
        return (
            isinstance(move, PickMove)
            and space.is_open(move.open_set)
            and move.open_set >> pending.point & 1 == 1
        )
    return False


def _legal_family(space: FiniteSpace, move: Move) -> bool:
    return (
        isinstance(move, FamilyMove)
        and len(move.sets) > 0
        and all(m != 0 and space.is_open(m) for m in move.sets)
    )


def _family_union(move: Move) -> int:
    assert isinstance(move, (FamilyMove, FinSelMove))
    u = 0
    for m in move.sets:
        u |= m
    return u


def legal_moves(
    space: FiniteSpace,
    kind: GameKind,
    position: Position,
    mover: Player,
    mode: str = FULL,
) -> Iterator[Move]:
    """Stream the legal moves at a position.

    Player one's set never depends on the position; player two's depends
    only on the pending move.  Reduced mode yields the dominance-closed
    subset the solver uses.
    """
    if mover is Player.ONE:
        if position.pending is not None:
            raise GameError("player one cannot move while a move is pending")
        yield from one_moves(space, kind, mode)
    else:
        if position.pending is None:
            raise GameError("player two needs a pending move to reply to")
        yield from two_moves(space, kind, position.pending, mode)


# -- strategies ---------------------------------------------------------------


class Strategy:
    """A total mapping from positions to legal moves, as a pure state
    machine.

    ``choose`` must return a legal move for the strategy's player at any
    reachable state (``pending`` is None exactly when the strategy plays
    as player one); ``advance`` folds one completed inning into the
    state.  States must be hashable: the verifier memoizes on them.
    """

    player: Player
    kind: GameKind
    provenance: str = "scripted"

    def initial_state(self) -> Hashable:
        return ()

    def choose(self, state: Hashable, pending: Move | None) -> Move:
        raise NotImplementedError

    def advance(self, state: Hashable, one_move: Move, two_move: Move) -> Hashable:
        return state


class ScriptedStrategy(Strategy):
    """Plays a fixed move list; for tests and transcripts."""

    def __init__(self, kind: GameKind, player: Player, moves: Sequence[Move]):
        self.kind = kind
        self.player = player
        self.moves = tuple(moves)
        self.provenance = "scripted"

    def initial_state(self) -> Hashable:
        return 0

    def choose(self, state, pending):
        return self.moves[state]

    def advance(self, state, one_move, two_move):
        return state + 1


class FirstLegalStrategy(Strategy):
    """Always plays the canonically least legal move."""

    def __init__(self, space: FiniteSpace, kind: GameKind, player: Player):
        self.space = space
        self.kind = kind
        self.player = player
        self.provenance = "scripted"

    def choose(self, state, pending):
        if self.player is Player.ONE:
            return one_moves(self.space, self.kind)[0]
        return two_moves(self.space, self.kind, pending)[0]


class GreedyCellularityStrategy(Strategy):
    """Player two's witness-chasing strategy for the selection games.

    While the accumulated union is not dense, keep a nonempty open
    witness disjoint from it (here: the least minimal neighbourhood that
    qualifies) and select a family member meeting the witness; once
    dense, select the least member.  Each inning's selection meets a
    witness disjoint from everything previously selected, so the
    intersections form a growing disjoint family of nonempty opens and
    density must arrive within cellularity-many innings.
    """

    def __init__(self, space: FiniteSpace, kind: GameKind):
        if kind.tag not in (Tag.SEL_O_OD, Tag.SEL_C_OD, Tag.SEL_OD_OD):
            raise UnsupportedGameError(
                "the greedy strategy plays the single-selection games only"
            )
        self.space = space
        self.kind = kind
        self.player = Player.TWO
        self.provenance = "greedy"

    def initial_state(self) -> Hashable:
        return 0  # accumulated union

    def witness(self, accumulated: int) -> int | None:
        if self.space.is_dense(accumulated):
            return None
        for m in canonical_family(self.space.up):
            if m & accumulated == 0:
                return m
        raise AssertionError("a non-dense union misses some minimal neighbourhood")

    def choose(self, state, pending):
        assert isinstance(pending, FamilyMove)
        v = self.witness(state)
        if v is None:
            return PickMove(pending.sets[0])
        for m in pending.sets:
            if m & v:
                return PickMove(m)
        raise AssertionError("a dense-union family meets every nonempty open")

    def advance(self, state, one_move, two_move):
        return state | credit(self.kind, one_move, two_move)


def greedy_cellularity_strategy(space: FiniteSpace, kind: GameKind) -> Strategy:
    return GreedyCellularityStrategy(space, kind)


# -- transcripts ---------------------------------------------------------------


@dataclass(frozen=True)
class Transcript:
    kind: GameKind
    horizon: int
    moves: tuple[Move, ...]
    accumulated: int
    winner: Player

    def innings(self) -> list[tuple[Move, Move]]:
        return [
            (self.moves[2 * i], self.moves[2 * i + 1]) for i in range(self.horizon)
        ]

    def to_json(self) -> dict:
        movers = itertools.cycle([Player.ONE, Player.TWO])
        return {
            "kind": self.kind.label(),
            "horizon": self.horizon,
            "innings": [
                {"mover": mover.value, "move": move_to_json(move)}
                for mover, move in zip(movers, self.moves)
            ],
            "accumulated": pointset_to_json(self.accumulated),
            "winner": self.winner.value,
        }


def judge(space: FiniteSpace, kind: GameKind, accumulated: int) -> Player:
    """Apply the kind's winning predicate to a finished play."""
    dense = space.is_dense(accumulated)
    d = kind.density_player()
    return d if dense else d.other()


def play(
    space: FiniteSpace,
    kind: GameKind,
    strat_one: Strategy,
    strat_two: Strategy,
    horizon: int,
) -> Transcript:
    """Run the game for exactly ``horizon`` innings and judge the result.

    Raises IllegalMoveError the moment either strategy steps outside the
    legal move set.
    """
    s1, s2 = strat_one.initial_state(), strat_two.initial_state()
    accumulated = 0
    moves: list[Move] = []
    for inning in range(horizon):
        m1 = strat_one.choose(s1, None)
        if not is_legal(space, kind, None, m1, Player.ONE):
            raise IllegalMoveError(inning, Player.ONE, m1, tuple(moves))
        m2 = strat_two.choose(s2, m1)
        if not is_legal(space, kind, m1, m2, Player.TWO):
            raise IllegalMoveError(inning, Player.TWO, m2, tuple(moves) + (m1,))
        moves.extend((m1, m2))
        accumulated |= credit(kind, m1, m2)
        s1 = strat_one.advance(s1, m1, m2)
        s2 = strat_two.advance(s2, m1, m2)
    return Transcript(kind, horizon, tuple(moves), accumulated, judge(space, kind, accumulated))


# -- exact solving --------------------------------------------------------------


class Solver:
    """Backward-induction winner computation, memoized on positions.

    The memo key is (innings remaining, accumulated union): once the
    union is dense the density player has already won, and otherwise the
    future of the game depends on nothing else.  One solver instance
    answers every horizon up to any bound, and its value function is
    exact for arbitrary start positions, which lets solver strategies
    answer any legal position on demand.
    """

    def __init__(self, space: FiniteSpace, kind: GameKind, mode: str = REDUCED):
        self.space = space
        self.kind = kind
        self.mode = mode
        self.density_player = kind.density_player()
        self._one_moves = one_moves(space, kind, mode)
        self._memo: dict[tuple[int, int], Player] = {}

    def value(self, remaining: int, accumulated: int = 0) -> Player:
        """Who wins with optimal play from here, player one to move."""
        if self.space.is_dense(accumulated):
            return self.density_player
        if remaining == 0:
            return self.density_player.other()
        key = (remaining, accumulated)
        got = self._memo.get(key)
        if got is None:
            got = Player.TWO
            for move in self._one_moves:
                if self.pending_value(remaining, accumulated, move) is Player.ONE:
                    got = Player.ONE
                    break
            self._memo[key] = got
        return got

    def pending_value(self, remaining: int, accumulated: int, pending: Move) -> Player:
        """Who wins after player one has just offered ``pending``."""
        for reply in two_moves(self.space, self.kind, pending, self.mode):
            after = accumulated | credit(self.kind, pending, reply)
            if self.value(remaining - 1, after) is Player.TWO:
                return Player.TWO
        return Player.ONE

    def best_reply(self, remaining: int, accumulated: int, pending: Move) -> Move:
        replies = two_moves(self.space, self.kind, pending, self.mode)
        for reply in replies:
            after = accumulated | credit(self.kind, pending, reply)
            if self.value(remaining - 1, after) is Player.TWO:
                return reply
        return replies[0]

    def best_one_move(self, remaining: int, accumulated: int) -> Move:
        for move in self._one_moves:
            if self.pending_value(remaining, accumulated, move) is Player.ONE:
                return move
        return self._one_moves[0]

    def strategy(self, player: Player, horizon: int) -> "SolverStrategy":
        return SolverStrategy(self, player, horizon)


class SolverStrategy(Strategy):
    """Optimal play extracted from a solver; total on all legal positions.

    The state is (inning, accumulated).  Replies consult the exact value
    function, so the strategy is well defined even at positions the
    solving pass never visited (for instance against opponents playing
    outside the reduced move sets).
    """

    def __init__(self, solver: Solver, player: Player, horizon: int):
        self.solver = solver
        self.kind = solver.kind
        self.player = player
        self.horizon = horizon
        self.provenance = "solver"

    def initial_state(self) -> Hashable:
        return (0, 0)

    def choose(self, state, pending):
        inning, accumulated = state
        remaining = self.horizon - inning
        if self.player is Player.ONE:
            assert pending is None
            return self.solver.best_one_move(remaining, accumulated)
        assert pending is not None
        return self.solver.best_reply(remaining, accumulated, pending)

    def advance(self, state, one_move, two_move):
        inning, accumulated = state
        return (inning + 1, accumulated | credit(self.kind, one_move, two_move))


@dataclass(frozen=True)
class SolveResult:
    winner: Player
    strategy: Strategy
    solver: Solver = field(compare=False)


@lru_cache(maxsize=None)
def _solver(space: FiniteSpace, kind: GameKind, mode: str) -> Solver:
    return Solver(space, kind, mode)


def solve(
    space: FiniteSpace, kind: GameKind, horizon: int, mode: str = REDUCED
) -> SolveResult:
    """Exact winner at the given horizon, with a winning strategy.

    Exactly one player wins (finite two-player games of perfect
    information are determined), and the returned strategy is the
    winner's.
    """
    if horizon < 1:
        raise GameError("horizon must be >= 1")
    solver = _solver(space, kind, mode)
    winner = solver.value(horizon, 0)
    return SolveResult(winner, solver.strategy(winner, horizon), solver)


def minimal_winning_horizon(
    space: FiniteSpace,
    kind: GameKind,
    player: Player,
    max_h: int,
    mode: str = REDUCED,
) -> int | None:
    """Least horizon at which ``player`` wins, or None within the bound.

    Winning is monotone in the horizon for the density player (density
    persists as the union grows) and antitone for the opponent, so the
    first hit is the answer.
    """
    if max_h < 1:
        raise GameError("max_h must be >= 1")
    solver = _solver(space, kind, mode)
    for h in range(1, max_h + 1):
        if solver.value(h, 0) is player:
            return h
    return None


# -- exhaustive verification -----------------------------------------------------


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    counterexample: Transcript | None = None


def verify_winning(
    space: FiniteSpace,
    kind: GameKind,
    player: Player,
    strategy: Strategy,
    horizon: int,
) -> VerifyResult:
    """Check a strategy against every adversary play, full move sets.

    Explores the complete adversary tree, memoizing on (remaining
    innings, strategy state, accumulated union); for position-keyed
    strategies this collapses the search to the position graph.  On
    failure returns a concrete losing transcript.
    """
    d = kind.density_player()
    full_one = one_moves(space, kind, FULL)
    # memo: True when the strategy wins from the node, else the adversary
    # move that defeats it.
    memo: dict[tuple, object] = {}

    def node(remaining: int, state: Hashable, accumulated: int) -> object:
        if space.is_dense(accumulated):
            return True if player is d else False
        if remaining == 0:
            return True if player is not d else False
        key = (remaining, state, accumulated)
        got = memo.get(key)
        if got is not None:
            return got
        if player is Player.ONE:
            mine = strategy.choose(state, None)
            if not is_legal(space, kind, None, mine, Player.ONE):
                raise IllegalMoveError(horizon - remaining, Player.ONE, mine)
            result: object = True
            for reply in two_moves(space, kind, mine, FULL):
                after = strategy.advance(state, mine, reply)
                acc = accumulated | credit(kind, mine, reply)
                sub = node(remaining - 1, after, acc)
                if sub is not True:
                    result = reply
                    break
        else:
            result = True
            for offer in full_one:
                mine = strategy.choose(state, offer)
                if not is_legal(space, kind, offer, mine, Player.TWO):
                    raise IllegalMoveError(horizon - remaining, Player.TWO, mine)
                after = strategy.advance(state, offer, mine)
                acc = accumulated | credit(kind, offer, mine)
                sub = node(remaining - 1, after, acc)
                if sub is not True:
                    result = offer
                    break
        memo[key] = result
        return result

    outcome = node(horizon, strategy.initial_state(), 0)
    if outcome is True:
        return VerifyResult(True)
    # Walk the memo to collect the adversary's defeating line, finishing
    # with arbitrary legal moves once the outcome is already forced.
    adversary_moves: list[Move] = []
    state = strategy.initial_state()
    accumulated = 0
    for inning in range(horizon):
        remaining = horizon - inning
        stored = memo.get((remaining, state, accumulated))
        adv = stored if stored is not None and stored is not True else None
        if player is Player.ONE:
            mine = strategy.choose(state, None)
            reply = adv if adv is not None else two_moves(space, kind, mine, FULL)[0]
            adversary_moves.append(reply)
            state = strategy.advance(state, mine, reply)
            accumulated |= credit(kind, mine, reply)
        else:
            offer = adv if adv is not None else full_one[0]
            adversary_moves.append(offer)
            mine = strategy.choose(state, offer)
            state = strategy.advance(state, offer, mine)
            accumulated |= credit(kind, offer, mine)
    adversary = ScriptedStrategy(kind, player.other(), adversary_moves)
    if player is Player.ONE:
        transcript = play(space, kind, strategy, adversary, horizon)
    else:
        transcript = play(space, kind, adversary, strategy, horizon)
    assert transcript.winner is not player
    return VerifyResult(False, transcript)
