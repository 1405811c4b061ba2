"""Strategy transduction between the dual games.

Each function here turns a winning strategy for one game into a winning
strategy for its dual game at the same horizon, constructively.  The two
claim extractors recover, from a selection strategy for player two, an
object every neighbourhood (resp. open subset) of which the strategy can
be provoked into playing; the transducers then reconstruct, inning by
inning, an opponent history that realizes what they observe.

Transducers refuse to run when the solver disagrees that the source
player wins at the requested horizon, so every emitted strategy carries
a contract the verifier can check.
"""

from __future__ import annotations

from typing import Hashable, Sequence

from .games import (
    FULL,
    OPEN_OPEN,
    POINT_OPEN,
    REDUCED,
    SEL_C_OD,
    SEL_O_OD,
    SEL_OD_OD,
    FamilyMove,
    GameKind,
    Move,
    PickMove,
    PointMove,
    Player,
    Strategy,
    one_moves,
    solve,
)
from .space import (
    FiniteSpace,
    canonical_family,
    iter_points,
    maximal_disjoint_refinement,
)


class DualityError(Exception):
    pass


class ClaimFailureError(DualityError):
    """The non-realizable sets cover too much: the source mapping is not
    a strategy of the required shape."""


class ReconstructionFailureError(DualityError):
    """An observed reply is not realizable by any legal opponent move."""


class StrategyWinnerMismatchError(DualityError):
    def __init__(self, kind: GameKind, player: Player, horizon: int, actual: Player):
        super().__init__(
            f"transduction needs player {player.value} to win {kind.label()} "
            f"at horizon {horizon}, but the solver winner is {actual.value}"
        )


def _require_winner(
    space: FiniteSpace, kind: GameKind, player: Player, horizon: int
) -> None:
    actual = solve(space, kind, horizon, mode=REDUCED).winner
    if actual is not player:
        raise StrategyWinnerMismatchError(kind, player, horizon, actual)


def _advance_two(
    strategy: Strategy, state: Hashable, offers: Sequence[FamilyMove]
) -> Hashable:
    """Feed a player-two strategy its own replies along a move prefix."""
    for offer in offers:
        reply = strategy.choose(state, offer)
        state = strategy.advance(state, offer, reply)
    return state


def _realizable_map(
    space: FiniteSpace, sigma: Strategy, state: Hashable, offers: tuple[Move, ...]
) -> dict[int, Move]:
    """For each open set sigma can be provoked into selecting next, the
    least opponent move that provokes it.  Freshly enumerated at every
    inning; nothing is cached across innings."""
    out: dict[int, Move] = {}
    for offer in offers:
        reply = sigma.choose(state, offer)
        assert isinstance(reply, PickMove)
        out.setdefault(reply.open_set, offer)
    return out


def claim_point(
    space: FiniteSpace, sigma: Strategy, prefix: Sequence[FamilyMove]
) -> int:
    """A point whose every neighbourhood is a possible next selection of
    ``sigma`` (a player-two strategy in the cover-selection game) after
    the given cover prefix.

    The opens no cover can provoke cannot themselves cover the space:
    sigma's reply to that very family would be one of them.  Any point
    they miss qualifies; the least one is returned, and the defining
    property is re-checked before returning.
    """
    state = _advance_two(sigma, sigma.initial_state(), list(prefix))
    return _claim_point_at(space, sigma, state)


def _claim_point_at(space: FiniteSpace, sigma: Strategy, state: Hashable) -> int:
    realizable = _realizable_map(space, sigma, state, one_moves(space, SEL_O_OD, FULL))
    unreachable_union = 0
    for o in space.nonempty_opens():
        if o not in realizable:
            unreachable_union |= o
    uncovered = space.all_mask & ~unreachable_union
    if not uncovered:
        raise ClaimFailureError(
            "every point lies in an open set the strategy never selects"
        )
    point = next(iter_points(uncovered))
    for o in space.nonempty_opens():
        if o >> point & 1 and o not in realizable:
            raise AssertionError("claimed point has an unrealizable neighbourhood")
    return point


def claim_open(
    space: FiniteSpace, sigma: Strategy, prefix: Sequence[FamilyMove]
) -> int:
    """A nonempty open set all of whose nonempty open subsets are possible
    next selections of ``sigma`` (a player-two strategy in the dense-dense
    selection game) after the given prefix.

    The unprovokable opens cannot have dense union, so some nonempty open
    avoids them all; the least such is returned, post-checked.
    """
    state = _advance_two(sigma, sigma.initial_state(), list(prefix))
    return _claim_open_at(space, sigma, state)


def _claim_open_at(space: FiniteSpace, sigma: Strategy, state: Hashable) -> int:
    realizable = _realizable_map(space, sigma, state, one_moves(space, SEL_OD_OD, FULL))
    unreachable_union = 0
    for o in space.nonempty_opens():
        if o not in realizable:
            unreachable_union |= o
    if space.is_dense(unreachable_union):
        raise ClaimFailureError(
            "the open sets the strategy never selects have dense union"
        )
    for o in space.nonempty_opens():
        if o & unreachable_union == 0:
            for sub in space.nonempty_opens():
                if sub & ~o == 0 and sub not in realizable:
                    raise AssertionError(
                        "claimed open has an unrealizable open subset"
                    )
            return o
    raise ClaimFailureError("no nonempty open avoids the unrealizable sets")


class TransducedStrategy(Strategy):
    """A strategy produced from another game's winning strategy.

    ``auxiliary`` decodes the per-history bookkeeping the construction
    maintains (reconstructed opponent sequences, intersection witnesses)
    so tests can check it is consistent with the source strategy.
    """

    construction: str
    source: Strategy

    def auxiliary(self, state: Hashable) -> dict:
        raise NotImplementedError


def _least_realizer(
    space: FiniteSpace,
    sigma: Strategy,
    state: Hashable,
    offers: tuple[Move, ...],
    target: int,
    what: str,
) -> Move:
    for offer in offers:
        reply = sigma.choose(state, offer)
        assert isinstance(reply, PickMove)
        if reply.open_set == target:
            return offer
    raise ReconstructionFailureError(
        f"no {what} provokes the observed reply {list(iter_points(target))}"
    )


class _WlSelectionToPointOpen(TransducedStrategy):
    """Point-open strategy for player one out of a winning cover-selection
    strategy for player two.

    Each inning names the claimed point for the current reconstructed
    cover prefix; whatever open the opponent answers with is, by the
    claim, sigma's reply to the prefix extended by some cover, and the
    least such cover extends the reconstruction.
    """

    construction = "wl-selection-to-point-open"

    def __init__(self, space: FiniteSpace, source: Strategy):
        self.space = space
        self.source = source
        self.kind = POINT_OPEN
        self.player = Player.ONE
        self.provenance = self.construction

    def initial_state(self):
        return (self.source.initial_state(), ())

    def choose(self, state, pending):
        sigma_state, _ = state
        return PointMove(_claim_point_at(self.space, self.source, sigma_state))

    def advance(self, state, one_move, two_move):
        sigma_state, trail = state
        assert isinstance(two_move, PickMove)
        offers = one_moves(self.space, SEL_O_OD, FULL)
        cover = _least_realizer(
            self.space, self.source, sigma_state, offers, two_move.open_set, "cover"
        )
        next_state = self.source.advance(sigma_state, cover, two_move)
        return (next_state, trail + ((cover, two_move),))

    def auxiliary(self, state):
        _, trail = state
        return {
            "reconstructed_covers": tuple(c for c, _ in trail),
            "observed_replies": tuple(r for _, r in trail),
        }


def wl_to_pointopen(
    space: FiniteSpace, sigma: Strategy, horizon: int
) -> TransducedStrategy:
    _require_winner(space, SEL_O_OD, Player.TWO, horizon)
    return _WlSelectionToPointOpen(space, sigma)


class _OpenOpenOneToSelectionTwo(TransducedStrategy):
    """Dense-dense selection strategy for player two out of a winning
    open-open strategy for player one.

    Replies with the least family member meeting the source's current
    open; the nonempty intersection is fed back to the source as the
    shrink it was answered with.
    """

    construction = "open-open-one-to-selection-two"

    def __init__(self, space: FiniteSpace, source: Strategy):
        self.space = space
        self.source = source
        self.kind = SEL_OD_OD
        self.player = Player.TWO
        self.provenance = self.construction

    def initial_state(self):
        return (self.source.initial_state(), ())

    def _current_open(self, tau_state) -> int:
        move = self.source.choose(tau_state, None)
        assert isinstance(move, PickMove)
        return move.open_set

    def choose(self, state, pending):
        tau_state, _ = state
        assert isinstance(pending, FamilyMove)
        current = self._current_open(tau_state)
        for member in pending.sets:
            if member & current:
                return PickMove(member)
        raise AssertionError("a dense-union family meets every nonempty open")

    def advance(self, state, one_move, two_move):
        tau_state, trail = state
        assert isinstance(two_move, PickMove)
        current = self._current_open(tau_state)
        shrink = PickMove(current & two_move.open_set)
        assert shrink.open_set != 0
        next_state = self.source.advance(tau_state, PickMove(current), shrink)
        return (next_state, trail + ((current, shrink.open_set),))

    def auxiliary(self, state):
        _, trail = state
        return {
            "source_opens": tuple(c for c, _ in trail),
            "intersections": tuple(w for _, w in trail),
        }


def oo_one_to_sel_two(
    space: FiniteSpace, tau: Strategy, horizon: int
) -> TransducedStrategy:
    _require_winner(space, OPEN_OPEN, Player.ONE, horizon)
    return _OpenOpenOneToSelectionTwo(space, tau)


class _SelectionTwoToOpenOpenOne(TransducedStrategy):
    """Open-open strategy for player one out of a winning dense-dense
    selection strategy for player two: play claimed opens, reconstruct a
    dense family provoking each observed shrink."""

    construction = "selection-two-to-open-open-one"

    def __init__(self, space: FiniteSpace, source: Strategy):
        self.space = space
        self.source = source
        self.kind = OPEN_OPEN
        self.player = Player.ONE
        self.provenance = self.construction

    def initial_state(self):
        return (self.source.initial_state(), ())

    def choose(self, state, pending):
        sigma_state, _ = state
        return PickMove(_claim_open_at(self.space, self.source, sigma_state))

    def advance(self, state, one_move, two_move):
        sigma_state, trail = state
        assert isinstance(two_move, PickMove)
        offers = one_moves(self.space, SEL_OD_OD, FULL)
        family = _least_realizer(
            self.space,
            self.source,
            sigma_state,
            offers,
            two_move.open_set,
            "dense family",
        )
        next_state = self.source.advance(sigma_state, family, two_move)
        return (next_state, trail + ((family, two_move),))

    def auxiliary(self, state):
        _, trail = state
        return {
            "reconstructed_families": tuple(f for f, _ in trail),
            "observed_replies": tuple(r for _, r in trail),
        }


def sel_two_to_oo_one(
    space: FiniteSpace, sigma: Strategy, horizon: int
) -> TransducedStrategy:
    _require_winner(space, SEL_OD_OD, Player.TWO, horizon)
    return _SelectionTwoToOpenOpenOne(space, sigma)


class _OpenOpenTwoToSelectionOne(TransducedStrategy):
    """Dense-dense selection strategy for player one out of a winning
    open-open strategy for player two.

    Offers the family of every shrink the source could answer next; the
    union of those shrinks meets every nonempty open, so the family is a
    legal move.  The opponent's pick is realized by the least open that
    provokes it, extending the source's virtual open-open history.
    """

    construction = "open-open-two-to-selection-one"

    def __init__(self, space: FiniteSpace, source: Strategy):
        self.space = space
        self.source = source
        self.kind = SEL_OD_OD
        self.player = Player.ONE
        self.provenance = self.construction

    def initial_state(self):
        return (self.source.initial_state(), ())

    def _reply_map(self, tau_state) -> dict[int, int]:
        out: dict[int, int] = {}
        for o in self.space.nonempty_opens():
            reply = self.source.choose(tau_state, PickMove(o))
            assert isinstance(reply, PickMove)
            out.setdefault(reply.open_set, o)
        return out

    def choose(self, state, pending):
        tau_state, _ = state
        return FamilyMove(canonical_family(self._reply_map(tau_state)))

    def advance(self, state, one_move, two_move):
        tau_state, trail = state
        assert isinstance(two_move, PickMove)
        replies = self._reply_map(tau_state)
        offer = replies.get(two_move.open_set)
        if offer is None:
            raise ReconstructionFailureError(
                "the selected set is not a possible source reply"
            )
        next_state = self.source.advance(
            tau_state, PickMove(offer), PickMove(two_move.open_set)
        )
        return (next_state, trail + ((offer, two_move.open_set),))

    def auxiliary(self, state):
        _, trail = state
        return {
            "reconstructed_opens": tuple(o for o, _ in trail),
            "selected_replies": tuple(r for _, r in trail),
        }


def oo_two_to_sel_one(
    space: FiniteSpace, tau: Strategy, horizon: int
) -> TransducedStrategy:
    _require_winner(space, OPEN_OPEN, Player.TWO, horizon)
    return _OpenOpenTwoToSelectionOne(space, tau)


class _SelectionOneToOpenOpenTwo(TransducedStrategy):
    """Open-open strategy for player two out of a winning dense-dense
    selection strategy for player one.

    The source's current family has dense union, so some member meets
    the offered open; reply with the intersection and feed the member
    back to the source as player two's pick.  Every reply sits inside
    the picked member, so the replies stay non-dense whenever the source
    keeps the picks non-dense.
    """

    construction = "selection-one-to-open-open-two"

    def __init__(self, space: FiniteSpace, source: Strategy):
        self.space = space
        self.source = source
        self.kind = OPEN_OPEN
        self.player = Player.TWO
        self.provenance = self.construction

    def initial_state(self):
        return (self.source.initial_state(), ())

    def _pick_member(self, sigma_state, offered: int) -> tuple[FamilyMove, int]:
        family = self.source.choose(sigma_state, None)
        assert isinstance(family, FamilyMove)
        for member in family.sets:
            if member & offered:
                return family, member
        raise AssertionError("a dense-union family meets every nonempty open")

    def choose(self, state, pending):
        sigma_state, _ = state
        assert isinstance(pending, PickMove)
        _, member = self._pick_member(sigma_state, pending.open_set)
        return PickMove(member & pending.open_set)

    def advance(self, state, one_move, two_move):
        sigma_state, trail = state
        assert isinstance(one_move, PickMove)
        family, member = self._pick_member(sigma_state, one_move.open_set)
        next_state = self.source.advance(sigma_state, family, PickMove(member))
        return (next_state, trail + ((member, member & one_move.open_set),))

    def auxiliary(self, state):
        _, trail = state
        return {
            "picked_members": tuple(m for m, _ in trail),
            "intersections": tuple(w for _, w in trail),
        }


def sel_one_to_oo_two(
    space: FiniteSpace, sigma: Strategy, horizon: int
) -> TransducedStrategy:
    _require_winner(space, SEL_OD_OD, Player.ONE, horizon)
    return _SelectionOneToOpenOpenTwo(space, sigma)


class _CellularTwoToDenseTwo(TransducedStrategy):
    """Dense-dense selection strategy for player two out of a winning
    playful-ccc strategy for player two: refine the offered family to a
    maximal cellular one, consult the source, answer with the witness
    member of the original family.  The witness contains the source's
    pick, so density transfers upward."""

    construction = "cellular-two-to-dense-two"

    def __init__(self, space: FiniteSpace, source: Strategy):
        self.space = space
        self.source = source
        self.kind = SEL_OD_OD
        self.player = Player.TWO
        self.provenance = self.construction

    def _route(self, sigma_state, pending: FamilyMove) -> tuple[FamilyMove, PickMove, int]:
        refinement, witness = maximal_disjoint_refinement(self.space, pending.sets)
        cellular = FamilyMove(refinement)
        pick = self.source.choose(sigma_state, cellular)
        assert isinstance(pick, PickMove)
        return cellular, pick, witness[pick.open_set]

    def initial_state(self):
        return (self.source.initial_state(), ())

    def choose(self, state, pending):
        sigma_state, _ = state
        assert isinstance(pending, FamilyMove)
        _, _, answer = self._route(sigma_state, pending)
        return PickMove(answer)

    def advance(self, state, one_move, two_move):
        sigma_state, trail = state
        assert isinstance(one_move, FamilyMove)
        cellular, pick, _ = self._route(sigma_state, one_move)
        next_state = self.source.advance(sigma_state, cellular, pick)
        return (next_state, trail + ((cellular, pick.open_set),))

    def auxiliary(self, state):
        _, trail = state
        return {
            "refinements": tuple(c for c, _ in trail),
            "source_picks": tuple(p for _, p in trail),
        }


def cod_to_odod_two(
    space: FiniteSpace, sigma: Strategy, horizon: int
) -> TransducedStrategy:
    _require_winner(space, SEL_C_OD, Player.TWO, horizon)
    return _CellularTwoToDenseTwo(space, sigma)


class _DenseOneToCellularOne(TransducedStrategy):
    """Playful-ccc strategy for player one out of a winning dense-dense
    selection strategy for player one: offer the cellular refinement of
    the source's family and route the opponent's pick through the witness
    map.  The pick sits inside its witness, so non-density transfers
    downward."""

    construction = "dense-one-to-cellular-one"

    def __init__(self, space: FiniteSpace, source: Strategy):
        self.space = space
        self.source = source
        self.kind = SEL_C_OD
        self.player = Player.ONE
        self.provenance = self.construction

    def initial_state(self):
        return (self.source.initial_state(), ())

    def choose(self, state, pending):
        sigma_state, _ = state
        family = self.source.choose(sigma_state, None)
        assert isinstance(family, FamilyMove)
        refinement, _ = maximal_disjoint_refinement(self.space, family.sets)
        return FamilyMove(refinement)

    def advance(self, state, one_move, two_move):
        sigma_state, trail = state
        assert isinstance(two_move, PickMove)
        family = self.source.choose(sigma_state, None)
        assert isinstance(family, FamilyMove)
        _, witness = maximal_disjoint_refinement(self.space, family.sets)
        routed = witness[two_move.open_set]
        next_state = self.source.advance(sigma_state, family, PickMove(routed))
        return (next_state, trail + ((two_move.open_set, routed),))

    def auxiliary(self, state):
        _, trail = state
        return {
            "observed_picks": tuple(p for p, _ in trail),
            "witness_routes": tuple(w for _, w in trail),
        }


def odod_to_cod_one(
    space: FiniteSpace, sigma: Strategy, horizon: int
) -> TransducedStrategy:
    _require_winner(space, SEL_OD_OD, Player.ONE, horizon)
    return _DenseOneToCellularOne(space, sigma)


class _Relabeled(TransducedStrategy):
    """Identity adapter between the cellular and dense selection games.

    Maximal cellular families are dense-union families, so a player-two
    strategy for the dense game already answers cellular offers, and a
    player-one strategy for the cellular game already makes legal dense
    moves; only the kind label changes.
    """

    def __init__(self, source: Strategy, kind: GameKind, construction: str):
        self.source = source
        self.kind = kind
        self.player = source.player
        self.construction = construction
        self.provenance = construction

    def initial_state(self):
        return self.source.initial_state()

    def choose(self, state, pending):
        return self.source.choose(state, pending)

    def advance(self, state, one_move, two_move):
        return self.source.advance(state, one_move, two_move)

    def auxiliary(self, state):
        return {}


def identity_two_odod_as_cod(sigma: Strategy) -> TransducedStrategy:
    """Restrict a dense-game player-two strategy to cellular offers."""
    return _Relabeled(sigma, SEL_C_OD, "identity-dense-two-as-cellular-two")


def identity_one_cod_as_odod(sigma: Strategy) -> TransducedStrategy:
    """Read a cellular-game player-one strategy as a dense-game one."""
    return _Relabeled(sigma, SEL_OD_OD, "identity-cellular-one-as-dense-one")


ALL_CONSTRUCTIONS = (
    ("wl-selection-to-point-open", SEL_O_OD, Player.TWO, wl_to_pointopen, POINT_OPEN, Player.ONE),
    ("open-open-one-to-selection-two", OPEN_OPEN, Player.ONE, oo_one_to_sel_two, SEL_OD_OD, Player.TWO),
    ("selection-two-to-open-open-one", SEL_OD_OD, Player.TWO, sel_two_to_oo_one, OPEN_OPEN, Player.ONE),
    ("open-open-two-to-selection-one", OPEN_OPEN, Player.TWO, oo_two_to_sel_one, SEL_OD_OD, Player.ONE),
    ("selection-one-to-open-open-two", SEL_OD_OD, Player.ONE, sel_one_to_oo_two, OPEN_OPEN, Player.TWO),
    ("cellular-two-to-dense-two", SEL_C_OD, Player.TWO, cod_to_odod_two, SEL_OD_OD, Player.TWO),
    ("dense-one-to-cellular-one", SEL_OD_OD, Player.ONE, odod_to_cod_one, SEL_C_OD, Player.ONE),
)
