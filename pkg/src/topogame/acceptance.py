"""The exhaustive property suite behind ``topogame check``.

Each criterion is a function returning a CriterionResult; the test suite
asserts them and the CLI prints one line per criterion.  They are
deliberately exhaustive over small spaces rather than sampled: at n <= 4
every claim is checked on every labeled space with zero tolerance.

One check is kept as a documented expected failure: the strong form of
the horizon-collapse identity additionally equates the weak-Lindelof
cluster with the open-open cluster, and that is false on the three-point
fan (see ``criterion_horizon_collapse_literal``).  The corrected cluster
identities are checked separately and must pass.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import invariants
from .census import run_census
from .dualities import ALL_CONSTRUCTIONS
from .games import (
    FULL,
    OPEN_OPEN,
    POINT_OPEN,
    REDUCED,
    SEL_C_OD,
    SEL_O_OD,
    SEL_OD_OD,
    Player,
    _solver,
    greedy_cellularity_strategy,
    minimal_winning_horizon,
    sel_fin,
    solve,
    verify_winning,
)
from .space import (
    FiniteSpace,
    enumerate_maximal_cellular,
    delta_space,
    is_regular,
)
from .spacegen import (
    all_spaces_up_to,
    count_preorders_extension,
    count_preorders_via_posets,
    enumerate_preorders_bruteforce,
    enumerate_topologies,
)

EXPECTED_LABELED_COUNTS = {1: 1, 2: 4, 3: 29, 4: 355, 5: 6942, 6: 209527}


@dataclass
class CriterionResult:
    name: str
    ok: bool
    detail: str = ""
    expected_failure: bool = False
    seconds: float = 0.0
    failures: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        note = f" [{self.detail}]" if self.detail else ""
        return f"{status}  {self.name} ({self.seconds:.1f}s){note}"


def _timed(fn):
    def wrapper(*args, **kwargs) -> CriterionResult:
        start = time.monotonic()
        result = fn(*args, **kwargs)
        result.seconds = time.monotonic() - start
        return result

    return wrapper


@_timed
def criterion_enumeration_counts() -> CriterionResult:
    """Labeled topology counts for n = 1..5, two algorithms agreeing."""
    failures = []
    for n in range(1, 6):
        brute = sum(1 for _ in enumerate_preorders_bruteforce(n))
        extension = count_preorders_extension(n)
        expected = EXPECTED_LABELED_COUNTS[n]
        if not (brute == extension == expected):
            failures.append(
                f"n={n}: bruteforce {brute}, extension {extension}, expected {expected}"
            )
    return CriterionResult(
        "enumeration counts n=1..5, two independent algorithms",
        not failures,
        "; ".join(failures) or "1, 4, 29, 355, 6942",
        failures=failures,
    )


@_timed
def criterion_enumeration_stretch() -> CriterionResult:
    """Optional n=6 count, extension vs partition/poset decomposition."""
    extension = count_preorders_extension(6)
    decomposed = count_preorders_via_posets(6)
    expected = EXPECTED_LABELED_COUNTS[6]
    ok = extension == decomposed == expected
    return CriterionResult(
        "enumeration count n=6 (stretch)",
        ok,
        f"extension {extension}, poset decomposition {decomposed}, expected {expected}",
    )


def _horizon_table(space: FiniteSpace, max_h: int) -> dict[str, int | None]:
    return {
        "h_two_SelOOD": minimal_winning_horizon(space, SEL_O_OD, Player.TWO, max_h),
        "h_two_SelCOD": minimal_winning_horizon(space, SEL_C_OD, Player.TWO, max_h),
        "h_two_SelODOD": minimal_winning_horizon(space, SEL_OD_OD, Player.TWO, max_h),
        "h_one_OpenOpen": minimal_winning_horizon(space, OPEN_OPEN, Player.ONE, max_h),
        "h_one_PointOpen": minimal_winning_horizon(space, POINT_OPEN, Player.ONE, max_h),
    }


@_timed
def criterion_winner_dualities(n: int = 4, max_h: int = 4) -> CriterionResult:
    """The five solver-level biconditionals over every n-point space."""
    failures = []
    checked = 0
    for entry in enumerate_topologies(n):
        space = entry.space
        solvers = {
            kind: _solver(space, kind, REDUCED)
            for kind in (SEL_O_OD, SEL_C_OD, SEL_OD_OD, OPEN_OPEN, POINT_OPEN)
        }
        for h in range(1, max_h + 1):
            w = {kind: solvers[kind].value(h, 0) for kind in solvers}
            pairs = [
                ("two SelODOD <-> one OpenOpen",
                 w[SEL_OD_OD] is Player.TWO, w[OPEN_OPEN] is Player.ONE),
                ("one SelODOD <-> two OpenOpen",
                 w[SEL_OD_OD] is Player.ONE, w[OPEN_OPEN] is Player.TWO),
                ("two SelCOD <-> two SelODOD",
                 w[SEL_C_OD] is Player.TWO, w[SEL_OD_OD] is Player.TWO),
                ("one SelCOD <-> one SelODOD",
                 w[SEL_C_OD] is Player.ONE, w[SEL_OD_OD] is Player.ONE),
                ("two SelOOD <-> one PointOpen",
                 w[SEL_O_OD] is Player.TWO, w[POINT_OPEN] is Player.ONE),
            ]
            for name, left, right in pairs:
                checked += 1
                if left != right:
                    failures.append(f"{entry.id} h={h}: {name} broken")
    return CriterionResult(
        f"winner dualities, all n={n} spaces, h=1..{max_h}",
        not failures,
        "; ".join(failures[:3]) or f"{checked} biconditionals hold",
        failures=failures,
    )


@_timed
def criterion_transducers(max_n: int = 3, max_h: int = 3) -> CriterionResult:
    """Every construction, applied whenever its source winner condition
    holds, yields a strategy the exhaustive verifier accepts."""
    failures = []
    applied = 0
    for n in range(1, max_n + 1):
        for entry in enumerate_topologies(n):
            space = entry.space
            for h in range(1, max_h + 1):
                for name, src_kind, src_player, build, dst_kind, dst_player in ALL_CONSTRUCTIONS:
                    result = solve(space, src_kind, h)
                    if result.winner is not src_player:
                        continue
                    transduced = build(space, result.strategy, h)
                    verdict = verify_winning(space, dst_kind, dst_player, transduced, h)
                    applied += 1
                    if not verdict.ok:
                        failures.append(f"{entry.id} h={h}: {name} failed verification")
    return CriterionResult(
        f"constructive transducers, all n<={max_n} spaces, h=1..{max_h}",
        not failures,
        "; ".join(failures[:3]) or f"{applied} transductions verified",
        failures=failures,
    )


@_timed
def criterion_greedy_bound(max_n: int = 4) -> CriterionResult:
    """The witness-chasing strategy wins every selection game within
    cellularity-many innings, against all adversary plays."""
    failures = []
    checked = 0
    for space in all_spaces_up_to(max_n):
        bound = invariants.cellularity(space)
        for kind in (SEL_O_OD, SEL_C_OD, SEL_OD_OD):
            strategy = greedy_cellularity_strategy(space, kind)
            verdict = verify_winning(space, kind, Player.TWO, strategy, bound)
            checked += 1
            if not verdict.ok:
                failures.append(
                    f"n={space.n} {space.up}: greedy loses {kind.label()} at h={bound}"
                )
    return CriterionResult(
        f"greedy cellularity bound, all n<={max_n} spaces",
        not failures,
        "; ".join(failures[:3]) or f"{checked} verifications",
        failures=failures,
    )


@_timed
def criterion_horizon_collapse_literal(max_n: int = 4, max_h: int = 4) -> CriterionResult:
    """The strong collapse identity, equating the weak-Lindelof horizons
    with the open-open horizon as well.

    Expected to fail: on the fan (one closed point under k incomparable
    open points) every cover contains the whole space, so the
    cover-selection and point-open games end at horizon 1, while in the
    open-open game player two keeps shrinking to single top points and
    player one needs as many innings as there are tops.  The smallest
    counterexample has three points.
    """
    failures = []
    for space in all_spaces_up_to(max_n):
        h = _horizon_table(space, max_h)
        wl = invariants.wl_degree(space)
        c = invariants.cellularity(space)
        if not (
            wl == h["h_two_SelOOD"] == h["h_one_OpenOpen"] == h["h_one_PointOpen"]
        ):
            failures.append(
                f"n={space.n} {space.up}: wl={wl} h_two_SelOOD={h['h_two_SelOOD']} "
                f"h_one_OpenOpen={h['h_one_OpenOpen']} h_one_PointOpen={h['h_one_PointOpen']}"
            )
        elif not (h["h_two_SelCOD"] == h["h_two_SelODOD"] and h["h_two_SelODOD"] <= c):
            failures.append(
                f"n={space.n} {space.up}: SelCOD/SelODOD horizons "
                f"{h['h_two_SelCOD']}/{h['h_two_SelODOD']} vs cellularity {c}"
            )
    return CriterionResult(
        f"horizon collapse identity (literal form), all n<={max_n} spaces",
        not failures,
        "; ".join(failures[:2]) or "all equal",
        expected_failure=True,
        failures=failures,
    )


@_timed
def criterion_horizon_collapse_corrected(max_n: int = 4, max_h: int = 4) -> CriterionResult:
    """The identities that are actually theorems: the weak-Lindelof
    cluster collapses to wl_degree, the dense cluster collapses to one
    value bounded by cellularity, and the first never exceeds the
    second."""
    failures = []
    for space in all_spaces_up_to(max_n):
        h = _horizon_table(space, max_h)
        wl = invariants.wl_degree(space)
        c = invariants.cellularity(space)
        ok = (
            wl == h["h_two_SelOOD"] == h["h_one_PointOpen"]
            and h["h_two_SelCOD"] == h["h_two_SelODOD"] == h["h_one_OpenOpen"]
            and h["h_two_SelODOD"] is not None
            and h["h_two_SelODOD"] <= c
            and wl <= h["h_one_OpenOpen"]
        )
        if not ok:
            failures.append(f"n={space.n} {space.up}: wl={wl} c={c} horizons={h}")
    return CriterionResult(
        f"horizon collapse identity (corrected clusters), all n<={max_n} spaces",
        not failures,
        "; ".join(failures[:3]) or "clusters collapse as proved",
        failures=failures,
    )


@_timed
def criterion_fastpath_agreement(max_n: int = 4, reduced_n: int = 3, reduced_h: int = 3) -> CriterionResult:
    """Structural fast paths match naive search; reduced move sets match
    full ones."""
    failures = []
    for space in all_spaces_up_to(max_n):
        if invariants.pi_weight(space) != invariants.pi_weight_bruteforce(space):
            failures.append(f"pi_weight mismatch on {space.up}")
        if invariants.wl_degree(space) != invariants.wl_degree_bruteforce(space):
            failures.append(f"wl_degree mismatch on {space.up}")
    kinds = (SEL_O_OD, SEL_C_OD, SEL_OD_OD, sel_fin(2), OPEN_OPEN, POINT_OPEN)
    for space in all_spaces_up_to(reduced_n):
        for kind in kinds:
            for h in range(1, reduced_h + 1):
                reduced = solve(space, kind, h, mode=REDUCED).winner
                full = solve(space, kind, h, mode=FULL).winner
                if reduced is not full:
                    failures.append(
                        f"{kind.label()} h={h} on {space.up}: reduced {reduced.value} "
                        f"vs full {full.value}"
                    )
    return CriterionResult(
        "fast-path and reduced-mode agreement with oracles",
        not failures,
        "; ".join(failures[:3]) or "all agree",
        failures=failures,
    )


@_timed
def criterion_kernel_algebra(max_n: int = 4) -> CriterionResult:
    """Closure/interior algebra, cellular families are dense, the
    countable-intersection retopologization is the identity, regularity
    is symmetry."""
    failures = []
    for space in all_spaces_up_to(max_n):
        full = space.all_mask
        for a in range(full + 1):
            ca = space.closure(a)
            if space.closure(ca) != ca:
                failures.append(f"{space.up}: closure not idempotent on {a:b}")
            if space.interior(a) != full & ~space.closure(full & ~a):
                failures.append(f"{space.up}: interior/closure duality fails on {a:b}")
            for b in range(a, full + 1):
                if space.closure(a | b) != ca | space.closure(b):
                    failures.append(f"{space.up}: closure not additive on {a:b},{b:b}")
                    break
        for family in enumerate_maximal_cellular(space):
            union = 0
            for m in family:
                union |= m
            if not space.is_dense(union):
                failures.append(f"{space.up}: cellular family {family} not dense")
        if delta_space(space) != space:
            failures.append(f"{space.up}: retopologization changed the space")
        symmetric = all(
            (space.up[i] >> j & 1) == (space.up[j] >> i & 1)
            for i in range(space.n)
            for j in range(space.n)
        )
        if is_regular(space) != symmetric:
            failures.append(f"{space.up}: regularity disagrees with symmetry")
    return CriterionResult(
        f"kernel algebra, exhaustive at n<={max_n}",
        not failures,
        "; ".join(failures[:3]) or "all identities hold",
        failures=failures,
    )


@_timed
def criterion_census_headline(n: int = 4, max_h: int = 4, workers: int = 1) -> CriterionResult:
    """The full census run with its cross-assertions."""
    rows, violations = run_census(n, max_h, workers=workers)
    ok = len(rows) == EXPECTED_LABELED_COUNTS[n] and not violations
    return CriterionResult(
        f"census n={n} completes with all row assertions holding",
        ok,
        "; ".join(violations[:3]) or f"{len(rows)} rows, zero violations",
        failures=violations,
    )


def run_all(stretch: bool = False, census_workers: int = 1) -> list[CriterionResult]:
    results = [
        criterion_enumeration_counts(),
        criterion_winner_dualities(),
        criterion_transducers(),
        criterion_greedy_bound(),
        criterion_horizon_collapse_literal(),
        criterion_horizon_collapse_corrected(),
        criterion_fastpath_agreement(),
        criterion_kernel_algebra(),
        criterion_census_headline(workers=census_workers),
    ]
    if stretch:
        results.append(criterion_enumeration_stretch())
    return results
