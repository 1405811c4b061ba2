"""Cardinal invariants of finite spaces, exact by construction.

Each invariant has a structural fast path used in production and a naive
search used as the test oracle; the two are cross-checked exhaustively
on small spaces.  Everything returns plain naturals: at this scale the
invariants are finite and correctness is the whole point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .space import FiniteSpace, canonical_family, enumerate_covers, set_key


@dataclass(frozen=True)
class InvariantReport:
    cellularity: int
    density: int
    pi_weight: int
    pi_character: tuple[int, ...]
    wl_degree: int

    def to_json(self) -> dict:
        return {
            "cellularity": self.cellularity,
            "density": self.density,
            "pi_weight": self.pi_weight,
            "pi_character": list(self.pi_character),
            "wl_degree": self.wl_degree,
        }


def report(space: FiniteSpace) -> InvariantReport:
    return InvariantReport(
        cellularity=cellularity(space),
        density=density(space),
        pi_weight=pi_weight(space),
        pi_character=tuple(pi_character(space, x) for x in range(space.n)),
        wl_degree=wl_degree(space),
    )


def cellularity(space: FiniteSpace) -> int:
    """Largest size of a pairwise-disjoint family of nonempty opens.

    Any disjoint open family yields an equally large disjoint family of
    minimal neighbourhoods (pick one point per member), so it suffices
    to find a maximum independent set in the intersection graph of the
    distinct minimal neighbourhoods.  Branch and bound; fine up to a
    dozen points.
    """
    nbhds = canonical_family(space.up)
    m = len(nbhds)
    order = sorted(range(m), key=lambda i: nbhds[i].bit_count())
    best = 0

    def rec(idx: int, used: int, size: int) -> None:
        nonlocal best
        if size + (m - idx) <= best:
            return
        if idx == m:
            best = max(best, size)
            return
        i = order[idx]
        if nbhds[i] & used == 0:
            rec(idx + 1, used | nbhds[i], size + 1)
        rec(idx + 1, used, size)

    rec(0, 0, 0)
    return best


def cellularity_bruteforce(space: FiniteSpace) -> int:
    """Oracle: try every family of nonempty opens for disjointness."""
    opens = space.nonempty_opens()
    best = 0
    for r in range(len(opens), 0, -1):
        if r <= best:
            break
        for fam in itertools.combinations(opens, r):
            used = 0
            for m in fam:
                if m & used:
                    break
                used |= m
            else:
                best = max(best, r)
                break
    return best


def density(space: FiniteSpace) -> int:
    """Least size of a dense set of points."""
    for r in range(1, space.n + 1):
        for pts in itertools.combinations(range(space.n), r):
            if space.is_dense(sum(1 << p for p in pts)):
                return r
    raise AssertionError("the full point set is always dense")


def _is_pi_base(space: FiniteSpace, family: tuple[int, ...], targets: tuple[int, ...]) -> bool:
    return all(any(p & ~t == 0 for p in family) for t in targets)


def pi_weight(space: FiniteSpace) -> int:
    """Least size of a family of nonempty opens meeting every nonempty
    open from below.

    Fast path: the inclusion-minimal sets among the distinct minimal
    neighbourhoods form a smallest such family.  They reach below every
    open; and distinct minimal ones need distinct witnesses, since an
    open inside an inclusion-minimal neighbourhood contains a minimal
    neighbourhood and hence equals it.
    """
    nbhds = canonical_family(space.up)
    minimal = [m for m in nbhds if not any(o != m and o & ~m == 0 for o in nbhds)]
    return len(minimal)


def pi_weight_bruteforce(space: FiniteSpace) -> int:
    """Oracle: increasing-size search over all candidate families."""
    opens = space.nonempty_opens()
    for r in range(1, len(opens) + 1):
        for fam in itertools.combinations(opens, r):
            if _is_pi_base(space, fam, opens):
                return r
    raise AssertionError("the family of all nonempty opens is a pi-base")


def pi_character(space: FiniteSpace, x: int) -> int:
    """Least size of a family of nonempty opens meeting every
    neighbourhood of x from below.  Computed by search; on a finite
    space the minimal neighbourhood alone always works, so the answer
    is 1, and tests pin that degeneracy."""
    opens = space.nonempty_opens()
    targets = tuple(o for o in opens if o >> x & 1)
    for r in range(1, len(opens) + 1):
        for fam in itertools.combinations(opens, r):
            if _is_pi_base(space, fam, targets):
                return r
    raise AssertionError("unreachable: {minimal nbhd} is a local pi-base")


def min_dense_subfamily(space: FiniteSpace, cover: tuple[int, ...]) -> int:
    """Least number of members of the family with a dense union."""
    members = canonical_family(cover)
    for r in range(1, len(members) + 1):
        for sub in itertools.combinations(members, r):
            u = 0
            for m in sub:
                u |= m
            if space.is_dense(u):
                return r
    raise AssertionError("a cover itself always has dense union")


def wl_degree(space: FiniteSpace) -> int:
    """Weak Lindelof degree: the worst open cover's least dense selection.

    Fast path: only the cover of minimal neighbourhoods matters.  It
    refines every cover (an open set containing x contains up[x]), and a
    dense selection from it maps member-by-member into an equally small
    dense selection from any other cover, so it attains the maximum.
    """
    return min_dense_subfamily(space, space.minimal_nbhd_cover())


def wl_degree_bruteforce(space: FiniteSpace) -> int:
    """Oracle: literally every open cover."""
    return max(
        min_dense_subfamily(space, cover) for cover in enumerate_covers(space)
    )


def pi_base_fastpath_family(space: FiniteSpace) -> tuple[int, ...]:
    """The witness family behind the pi_weight fast path, for inspection."""
    nbhds = canonical_family(space.up)
    return tuple(
        sorted(
            (m for m in nbhds if not any(o != m and o & ~m == 0 for o in nbhds)),
            key=set_key,
        )
    )
