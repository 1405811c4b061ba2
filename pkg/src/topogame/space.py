"""Finite topological spaces encoded as specialization preorders.

A topology on points 0..n-1 is the same thing as a reflexive transitive
relation: declare i <= j when i lies in the closure of {j}; the open sets
are then exactly the up-sets of the relation, and every topology on a
finite set arises this way.  Point sets travel as int bitmasks, families
of open sets as canonically ordered tuples of masks.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

# Point sets are int bitmasks; families of opens are tuples of masks.
PointSet = int
OpenFamily = tuple[int, ...]

# Family enumeration refuses to consider more candidates than this.
DEFAULT_FAMILY_CAP = 1 << 20


class SpaceError(Exception):
    """Base for construction and kernel errors."""


class EmptySpaceError(SpaceError):
    """The empty space is rejected: density and the games degenerate on it."""


class NotReflexiveError(SpaceError):
    def __init__(self, point: int):
        self.point = point
        super().__init__(f"relation is not reflexive at point {point}")


class NotTransitiveError(SpaceError):
    def __init__(self, i: int, j: int, k: int):
        self.witness = (i, j, k)
        super().__init__(
            f"relation is not transitive: {i}<={j} and {j}<={k} but not {i}<={k}"
        )


class PointRangeError(SpaceError):
    pass


class TopologyViolationError(SpaceError):
    """An explicit family of opens fails a topology axiom."""

    def __init__(self, operation: str, a: Iterable[int], b: Iterable[int] | None):
        self.operation = operation
        self.sets = (tuple(a), tuple(b) if b is not None else None)
        detail = f"{self.sets[0]}" + (f", {self.sets[1]}" if b is not None else "")
        super().__init__(f"family is not a topology: {operation} fails on {detail}")


class NotDenseFamilyError(SpaceError):
    pass


class ResourceCapError(SpaceError):
    def __init__(self, needed: int, cap: int, what: str = "families"):
        self.needed = needed
        self.cap = cap
        super().__init__(f"would enumerate {needed} {what}, cap is {cap}")


def iter_points(mask: int) -> Iterator[int]:
    """Yield the points of a bitmask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def points_of(mask: int) -> tuple[int, ...]:
    return tuple(iter_points(mask))


def set_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Canonical order on point sets: cardinality first, then the sorted
    member tuple lexicographically.  All tie-breaking in the package uses
    this key."""
    return (mask.bit_count(), points_of(mask))


def family_key(family: Sequence[int]) -> tuple:
    """Canonical order on families: size first, then member keys."""
    return (len(family), tuple(set_key(m) for m in family))


def canonical_family(masks: Iterable[int]) -> OpenFamily:
    """Deduplicate and sort a family of set masks into canonical order."""
    return tuple(sorted(set(masks), key=set_key))


class FiniteSpace:
    """A finite topological space, stored as its specialization preorder.

    ``up[i]`` is the mask {j : i <= j}, which equals the minimal open
    neighbourhood of i; ``down[i]`` is {j : j <= i}, the closure of {i}.
    Instances are immutable values: all operations are pure and results
    are cached on the instance, so spaces can be shared freely across
    workers.
    """

    def __init__(self, up_rows: Sequence[int], _validated: bool = False):
        rows = tuple(up_rows)
        n = len(rows)
        if n == 0:
            raise EmptySpaceError("spaces must have at least one point")
        self.n = n
        self.up = rows
        self.all_mask = (1 << n) - 1
        if not _validated:
            self._validate()
        self.down = tuple(
            mask_of(i for i in range(n) if rows[i] >> j & 1) for j in range(n)
        )
        self._closure_cache: dict[int, int] = {}
        self._opens: tuple[int, ...] | None = None

    def _validate(self) -> None:
        n, rows = self.n, self.up
        for i, row in enumerate(rows):
            if row >> i & 1 == 0:
                raise NotReflexiveError(i)
            if row > self.all_mask or row < 0:
                raise PointRangeError(f"row {i} mentions points outside 0..{n - 1}")
        for i in range(n):
            for j in iter_points(rows[i]):
                if rows[j] & ~rows[i]:
                    k = next(iter_points(rows[j] & ~rows[i]))
                    raise NotTransitiveError(i, j, k)

    # -- construction ------------------------------------------------------

    @classmethod
    def from_preorder(cls, matrix: Sequence[Sequence[int]]) -> "FiniteSpace":
        """Build a space from an n x n boolean matrix, row i column j
        holding i <= j.  Raises with a witness when the relation is not
        reflexive or not transitive."""
        n = len(matrix)
        if n == 0:
            raise EmptySpaceError("spaces must have at least one point")
        rows = []
        for i, row in enumerate(matrix):
            if len(row) != n:
                raise SpaceError(f"matrix is not square: row {i} has {len(row)} entries")
            rows.append(mask_of(j for j in range(n) if row[j]))
        return cls(rows)

    @classmethod
    def from_opens(cls, n: int, opens: Iterable[Iterable[int]]) -> "FiniteSpace":
        """Build a space from an explicit family of open sets.

        The family must be a topology: it must contain the empty set and
        the whole space and be closed under pairwise union and
        intersection.  The first violated instance is reported.
        """
        if n == 0:
            raise EmptySpaceError("spaces must have at least one point")
        all_mask = (1 << n) - 1
        family = set()
        for o in opens:
            m = mask_of(o)
            if m > all_mask or m < 0:
                raise PointRangeError(f"open set {tuple(o)} mentions points outside 0..{n - 1}")
            family.add(m)
        if 0 not in family:
            raise TopologyViolationError("missing empty set", (), None)
        if all_mask not in family:
            raise TopologyViolationError("missing whole space", range(n), None)
        members = sorted(family)
        for a in members:
            for b in members:
                if a < b:
                    if a | b not in family:
                        raise TopologyViolationError("union", points_of(a), points_of(b))
                    if a & b not in family:
                        raise TopologyViolationError("intersection", points_of(a), points_of(b))
        rows = []
        for i in range(n):
            nbhd = all_mask
            for m in members:
                if m >> i & 1:
                    nbhd &= m
            rows.append(nbhd)
        space = cls(rows)
        if set(space.opens()) != family:
            # Cannot happen once the axioms above hold; kept as a guard.
            raise TopologyViolationError("family is not the up-set family", (), None)
        return space

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteSpace) and self.up == other.up

    def __hash__(self) -> int:
        return hash(self.up)

    def __repr__(self) -> str:
        return f"FiniteSpace(n={self.n}, up={self.up})"

    def __reduce__(self):
        return (_rebuild_space, (self.up,))

    # -- basic relations ---------------------------------------------------

    def leq(self, i: int, j: int) -> bool:
        """i <= j, i.e. i lies in the closure of {j}."""
        self._check_point(i)
        self._check_point(j)
        return bool(self.up[i] >> j & 1)

    def _check_point(self, x: int) -> None:
        if not 0 <= x < self.n:
            raise PointRangeError(f"point {x} outside 0..{self.n - 1}")

    def _check_subset(self, a: int) -> None:
        if a < 0 or a & ~self.all_mask:
            raise PointRangeError(f"mask {a:#x} mentions points outside 0..{self.n - 1}")

    def minimal_nbhd(self, x: int) -> int:
        """The smallest open set containing x."""
        self._check_point(x)
        return self.up[x]

    # -- set topology ------------------------------------------------------

    def closure(self, a: int) -> int:
        """Down-closure: every point below a member of ``a``."""
        self._check_subset(a)
        cached = self._closure_cache.get(a)
        if cached is None:
            c = 0
            for i in iter_points(a):
                c |= self.down[i]
            self._closure_cache[a] = cached = c
        return cached

    def interior(self, a: int) -> int:
        """Largest open set inside ``a``: the points whose minimal
        neighbourhood fits."""
        self._check_subset(a)
        return mask_of(i for i in iter_points(a) if self.up[i] & ~a == 0)

    def is_open(self, a: int) -> bool:
        self._check_subset(a)
        return all(self.up[i] & ~a == 0 for i in iter_points(a))

    def is_dense(self, a: int) -> bool:
        return self.closure(a) == self.all_mask

    def complement(self, a: int) -> int:
        return self.all_mask & ~a

    # -- open set enumeration ----------------------------------------------

    def opens(self) -> tuple[int, ...]:
        """All open sets, as masks in ascending order."""
        if self._opens is None:
            if self.n > 22:
                raise ResourceCapError(1 << self.n, 1 << 22, "subset candidates")
            self._opens = tuple(
                m for m in range(self.all_mask + 1) if self.is_open(m)
            )
        return self._opens

    def nonempty_opens(self) -> tuple[int, ...]:
        """Nonempty opens in canonical (cardinality, lexicographic) order."""
        return canonical_family(m for m in self.opens() if m)

    def minimal_nbhd_cover(self) -> OpenFamily:
        """The open cover made of all distinct minimal neighbourhoods.

        Every open cover is refined by this one: any open set containing
        x contains up[x]."""
        return canonical_family(self.up)

    def least_point_outside(self, a: int) -> int | None:
        rest = self.all_mask & ~a
        return next(iter_points(rest)) if rest else None


def _rebuild_space(rows: tuple[int, ...]) -> FiniteSpace:
    return FiniteSpace(rows, _validated=True)


def enumerate_opens(space: FiniteSpace) -> Iterator[int]:
    """All open sets as masks, ascending (includes the empty set)."""
    yield from space.opens()


def _subfamilies(space: FiniteSpace, cap: int) -> Iterator[OpenFamily]:
    """All nonempty families of nonempty opens, members in canonical order.

    Refuses up front when 2^(number of nonempty opens) exceeds the cap:
    enumeration must fail loudly, never truncate.
    """
    base = space.nonempty_opens()
    m = len(base)
    if 1 << m > cap:
        raise ResourceCapError(1 << m, cap)
    for sub in range(1, 1 << m):
        yield tuple(base[i] for i in iter_points(sub))


def enumerate_covers(
    space: FiniteSpace, cap: int = DEFAULT_FAMILY_CAP
) -> Iterator[OpenFamily]:
    """All open covers: families of nonempty opens whose union is X."""
    full = space.all_mask
    for fam in _subfamilies(space, cap):
        u = 0
        for m in fam:
            u |= m
        if u == full:
            yield fam


def enumerate_dense_families(
    space: FiniteSpace, cap: int = DEFAULT_FAMILY_CAP
) -> Iterator[OpenFamily]:
    """All families of nonempty opens with dense union."""
    for fam in _subfamilies(space, cap):
        u = 0
        for m in fam:
            u |= m
        if space.is_dense(u):
            yield fam


def is_maximal_cellular(space: FiniteSpace, family: Sequence[int]) -> bool:
    """Pairwise disjoint nonempty opens such that no nonempty open is
    disjoint from their union."""
    union = 0
    for m in family:
        if m == 0 or not space.is_open(m) or union & m:
            return False
        union |= m
    return space.interior(space.complement(union)) == 0


def enumerate_maximal_cellular(
    space: FiniteSpace, cap: int = DEFAULT_FAMILY_CAP
) -> Iterator[OpenFamily]:
    """All maximal pairwise-disjoint families of nonempty opens.

    Walks a pruned search tree over canonical opens instead of filtering
    all subfamilies; each family is produced once, members in canonical
    order.  The union of every family produced is dense.
    """
    base = space.nonempty_opens()
    count = 0

    def rec(start: int, used: int, members: tuple[int, ...]) -> Iterator[OpenFamily]:
        nonlocal count
        if members and space.interior(space.complement(used)) == 0:
            count += 1
            if count > cap:
                raise ResourceCapError(count, cap)
            yield members
        for i in range(start, len(base)):
            if base[i] & used == 0:
                yield from rec(i + 1, used | base[i], members + (base[i],))

    yield from rec(0, 0, ())


def maximal_disjoint_refinement(
    space: FiniteSpace, family: Sequence[int]
) -> tuple[OpenFamily, dict[int, int]]:
    """Greedily refine a dense-union family into a maximal cellular one.

    Scans every nonempty open contained in some member of ``family``,
    smallest first (canonical order), keeping those disjoint from the
    union collected so far.  Returns the refinement together with a
    witness map sending each member to the least member of ``family``
    containing it.

    The result is maximal among all cellular families, not just within
    the candidates: an open set disjoint from the result would meet some
    member of ``family`` (the union is dense), and the intersection
    would have been collected.
    """
    members = canonical_family(family)
    union_in = 0
    for m in members:
        if m == 0 or not space.is_open(m):
            raise NotDenseFamilyError("family members must be nonempty open sets")
        union_in |= m
    if not space.is_dense(union_in):
        raise NotDenseFamilyError("family union is not dense")
    candidates: list[tuple[int, int]] = []
    for o in space.nonempty_opens():
        for m in members:
            if o & ~m == 0:
                candidates.append((o, m))
                break
    picked: list[int] = []
    witness: dict[int, int] = {}
    used = 0
    for o, w in candidates:
        if o & used == 0:
            picked.append(o)
            witness[o] = w
            used |= o
    result = tuple(picked)
    assert is_maximal_cellular(space, result)
    return result, witness


# -- derived spaces and separation ----------------------------------------


def is_regular(space: FiniteSpace) -> bool:
    """Brute-force point/closed-set separation check."""
    opens = space.opens()
    closed = [space.complement(o) for o in opens]
    for f in closed:
        outside = space.all_mask & ~f
        for x in iter_points(outside):
            if not any(
                u >> x & 1 and any(f & ~v == 0 and u & v == 0 for v in opens)
                for u in opens
            ):
                return False
    return True


def delta_space(space: FiniteSpace) -> FiniteSpace:
    """The space retopologized by countable intersections of opens.

    On a finite space every intersection of opens is already open, so
    the minimal countable-intersection set around each point is its
    minimal neighbourhood and the result equals the input.  Computed
    honestly rather than returned verbatim so the identity is a checked
    fact, not an assumption.
    """
    rows = []
    for x in range(space.n):
        g = space.all_mask
        for o in space.opens():
            if o >> x & 1:
                g &= o
        rows.append(g)
    out = FiniteSpace(rows)
    assert out == space
    return out


def product(s: FiniteSpace, t: FiniteSpace) -> FiniteSpace:
    """Product space: componentwise preorder on pairs (i, j) -> i*t.n + j."""
    rows = []
    for i in range(s.n):
        for j in range(t.n):
            row = 0
            for k in iter_points(s.up[i]):
                row |= t.up[j] << (k * t.n)
            rows.append(row)
    return FiniteSpace(rows, _validated=True)


def disjoint_sum(s: FiniteSpace, t: FiniteSpace) -> FiniteSpace:
    """Disjoint union; the copies do not relate to each other."""
    rows = list(s.up)
    rows.extend(row << s.n for row in t.up)
    return FiniteSpace(rows, _validated=True)


# -- JSON wire format ------------------------------------------------------

SPACE_JSON_VERSION = 1


def space_to_json(space: FiniteSpace) -> dict:
    return {
        "version": SPACE_JSON_VERSION,
        "points": space.n,
        "preorder": [
            [1 if space.up[i] >> j & 1 else 0 for j in range(space.n)]
            for i in range(space.n)
        ],
    }


def space_from_json(doc: dict) -> FiniteSpace:
    """Accepts the preorder form or the explicit-opens form."""
    if doc.get("version") != SPACE_JSON_VERSION:
        raise SpaceError(f"unsupported space JSON version {doc.get('version')!r}")
    n = doc.get("points")
    if not isinstance(n, int):
        raise SpaceError("missing integer field 'points'")
    if "preorder" in doc:
        matrix = doc["preorder"]
        if len(matrix) != n:
            raise SpaceError("preorder row count disagrees with 'points'")
        return FiniteSpace.from_preorder(matrix)
    if "opens" in doc:
        return FiniteSpace.from_opens(n, doc["opens"])
    raise SpaceError("space JSON needs a 'preorder' or 'opens' field")


def pointset_to_json(mask: int) -> list[int]:
    return list(iter_points(mask))


def family_to_json(family: Sequence[int]) -> list[list[int]]:
    return [pointset_to_json(m) for m in family]
