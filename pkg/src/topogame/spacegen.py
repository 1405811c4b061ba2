"""Constructing, enumerating and sampling finite spaces.

Two deliberately independent enumeration algorithms back the labeled
topology counts (1, 4, 29, 355, 6942, 209527 for n = 1..6): a vectorized
brute-force filter over all candidate relations, and an incremental
row-extension search that prunes transitivity violations early.  A third
cross-check combines labeled poset counts with Stirling partition
numbers.
"""

from __future__ import annotations

import hashlib
import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .space import FiniteSpace, SpaceError, mask_of

RANDOM_SPACE_ALGORITHM = "bernoulli-edges+warshall-closure/v1"


# -- named constructions ----------------------------------------------------


def discrete(n: int) -> FiniteSpace:
    """Every set open: the identity preorder."""
    return FiniteSpace([1 << i for i in range(n)])


def indiscrete(n: int) -> FiniteSpace:
    """Only the empty set and the whole space are open."""
    full = (1 << n) - 1
    return FiniteSpace([full] * n)


def sierpinski() -> FiniteSpace:
    """Two points, 0 <= 1; the opens are {}, {1}, {0,1}."""
    return FiniteSpace.from_preorder([[1, 1], [0, 1]])


def chain(n: int) -> FiniteSpace:
    """Total order 0 <= 1 <= ... <= n-1; opens are the upper segments."""
    full = (1 << n) - 1
    return FiniteSpace([(full >> i) << i for i in range(n)])


def partition_space(blocks: Sequence[Iterable[int]]) -> FiniteSpace:
    """Points related exactly within blocks; opens are unions of blocks.

    Partition spaces are precisely the finite regular spaces.
    """
    masks = [mask_of(b) for b in blocks]
    seen = 0
    for m in masks:
        if m == 0:
            raise SpaceError("empty partition block")
        if m & seen:
            raise SpaceError("partition blocks overlap")
        seen |= m
    n = seen.bit_length()
    if seen != (1 << n) - 1:
        raise SpaceError("partition blocks must cover 0..n-1 without gaps")
    rows = [0] * n
    for m in masks:
        for i in range(n):
            if m >> i & 1:
                rows[i] = m
    return FiniteSpace(rows)


def fan(k: int) -> FiniteSpace:
    """One bottom point 0 below k pairwise-incomparable points 1..k.

    The top singletons are disjoint minimal opens; the only open set
    containing the bottom point is the whole space.
    """
    if k < 1:
        raise SpaceError("fan needs at least one top point")
    full = (1 << (k + 1)) - 1
    return FiniteSpace([full] + [1 << i for i in range(1, k + 1)])


def named(kind: str, *params: int) -> FiniteSpace:
    """Dispatch for the standard constructions, e.g. named('chain', 3)."""
    table = {
        "discrete": discrete,
        "indiscrete": indiscrete,
        "sierpinski": sierpinski,
        "chain": chain,
        "fan": fan,
    }
    if kind == "partition":
        blocks: list[list[int]] = []
        start = 0
        for size in params:
            blocks.append(list(range(start, start + size)))
            start += size
        return partition_space(blocks)
    if kind not in table:
        raise SpaceError(f"unknown space kind {kind!r}")
    return table[kind](*params)


# -- random spaces ----------------------------------------------------------


def random_space(n: int, density: float, seed: int) -> FiniteSpace:
    """Reflexive-transitive closure of a Bernoulli random relation.

    density 0 gives the discrete space, density 1 the indiscrete one;
    the result is deterministic in (n, density, seed).
    """
    if not 0.0 <= density <= 1.0:
        raise SpaceError("density must lie in [0, 1]")
    rng = random.Random(seed)
    rows = [1 << i for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and rng.random() < density:
                rows[i] |= 1 << j
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= rows[k]
    return FiniteSpace(rows, _validated=True)


# -- catalog ids -------------------------------------------------------------


def relation_bits(space: FiniteSpace) -> str:
    """Row-major 0/1 string of the preorder matrix."""
    return "".join(
        "1" if space.up[i] >> j & 1 else "0"
        for i in range(space.n)
        for j in range(space.n)
    )


def space_id(space: FiniteSpace) -> str:
    """Stable identifier: n plus the hex packing of the relation bits.

    This is an exact encoding, so it is injective on distinct preorders,
    unlike a lossy digest.
    """
    return f"{space.n}-{int(relation_bits(space), 2):0{(space.n * space.n + 3) // 4}x}"


def canonical_form(space: FiniteSpace) -> FiniteSpace:
    """Least relabeling of the space under all point permutations."""
    n = space.n
    best: tuple[int, ...] | None = None
    for perm in itertools.permutations(range(n)):
        rows = [0] * n
        for i in range(n):
            row = 0
            for j in range(n):
                if space.up[i] >> j & 1:
                    row |= 1 << perm[j]
            rows[perm[i]] = row
        key = tuple(rows)
        if best is None or key < best:
            best = key
    assert best is not None
    return FiniteSpace(best, _validated=True)


def iso_class_id(space: FiniteSpace) -> str:
    return space_id(canonical_form(space))


@dataclass(frozen=True)
class SpaceCatalogEntry:
    space: FiniteSpace
    id: str
    iso_class: str | None = None

    def to_json(self) -> dict:
        from .space import space_to_json

        doc = space_to_json(self.space)
        doc["id"] = self.id
        if self.iso_class is not None:
            doc["iso_class"] = self.iso_class
        return doc


def catalog_digest(entries: Iterable[SpaceCatalogEntry]) -> str:
    h = hashlib.sha256()
    for e in entries:
        h.update(e.id.encode())
    return h.hexdigest()[:16]


# -- enumeration, algorithm A: vectorized brute filter -----------------------


def enumerate_preorders_bruteforce(n: int) -> Iterator[tuple[int, ...]]:
    """Filter all 2^(n(n-1)) candidate relations down to the transitive
    ones, testing R o R <= R with a stacked boolean matrix product.

    Feasible for n <= 5 (about a million candidates); use the extension
    algorithm beyond that.
    """
    if not 1 <= n <= 5:
        raise SpaceError("brute-force enumeration supports 1 <= n <= 5")
    off_diag = [(i, j) for i in range(n) for j in range(n) if i != j]
    bits = len(off_diag)
    chunk = 1 << 14
    for start in range(0, 1 << bits, chunk):
        count = min(chunk, (1 << bits) - start)
        pattern = np.arange(start, start + count, dtype=np.int64)
        rel = np.zeros((count, n, n), dtype=bool)
        rel[:, range(n), range(n)] = True
        for b, (i, j) in enumerate(off_diag):
            rel[:, i, j] = (pattern >> b) & 1
        reli = rel.astype(np.uint8)
        square = np.matmul(reli, reli) > 0
        ok = ~np.any(square & ~rel, axis=(1, 2))
        for idx in np.nonzero(ok)[0]:
            rows = tuple(
                int(mask_of(j for j in range(n) if rel[idx, i, j]))
                for i in range(n)
            )
            yield rows


# -- enumeration, algorithm B: incremental extension with pruning ------------


def enumerate_preorders_extension(
    n: int, antisymmetric: bool = False, prefix_row: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Assign up-rows one point at a time, discarding partial relations
    that already break transitivity (or antisymmetry, for poset mode).

    A row candidate for point k is any mask containing k; against the
    rows already fixed it must satisfy, for i < k: if i is in row_k then
    row_i must contain row_k's closure demand, i.e. row_i >= row_k is
    checked once both are known.  Pruning uses exactly the constraints
    among assigned rows, so every completed assignment is transitive.

    ``prefix_row`` restricts the first row, which shards the search for
    parallel counting.
    """
    if n < 1:
        raise SpaceError("need n >= 1")
    candidates = [
        [m for m in range(1 << n) if m >> k & 1] for k in range(n)
    ]

    def consistent(rows: list[int], k: int) -> bool:
        rk = rows[k]
        for i in range(k):
            ri = rows[i]
            if rk >> i & 1:
                if ri & ~rk:
                    return False
                if antisymmetric and ri >> k & 1:
                    return False
            if ri >> k & 1 and rk & ~ri:
                return False
        return True

    def rec(rows: list[int], k: int) -> Iterator[tuple[int, ...]]:
        if k == n:
            yield tuple(rows)
            return
        for cand in candidates[k]:
            rows.append(cand)
            if consistent(rows, k):
                yield from rec(rows, k + 1)
            rows.pop()

    if prefix_row is not None:
        if prefix_row >> 0 & 1 == 0:
            return
        rows = [prefix_row]
        if consistent(rows, 0):
            yield from rec(rows, 1)
        return
    yield from rec([], 0)


def count_preorders_extension(n: int, antisymmetric: bool = False) -> int:
    return sum(1 for _ in enumerate_preorders_extension(n, antisymmetric))


def stirling2(n: int, k: int) -> int:
    """Stirling numbers of the second kind, by the standard recurrence."""
    table = [[0] * (k + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for i in range(1, n + 1):
        for j in range(1, min(i, k) + 1):
            table[i][j] = j * table[i - 1][j] + table[i - 1][j - 1]
    return table[n][k]


def count_preorders_via_posets(n: int) -> int:
    """Third count: a preorder is a set partition plus a partial order on
    the blocks, so the total is sum_k S(n, k) * P(k) with P the labeled
    poset count from the antisymmetric enumeration."""
    poset_counts = {
        k: count_preorders_extension(k, antisymmetric=True) for k in range(1, n + 1)
    }
    return sum(stirling2(n, k) * poset_counts[k] for k in range(1, n + 1))


# -- public enumeration api ---------------------------------------------------


def enumerate_topologies(
    n: int, up_to_iso: bool = False, algorithm: str = "extension"
) -> Iterator[SpaceCatalogEntry]:
    """All labeled topologies on n points (1 <= n <= 6), as catalog entries.

    With ``up_to_iso`` only the least representative of each relabeling
    class is produced.  The optional algorithm switch exists so tests can
    drive the two enumerators independently.
    """
    if not 1 <= n <= 6:
        raise SpaceError("topology enumeration supports 1 <= n <= 6")
    if algorithm == "extension":
        source = enumerate_preorders_extension(n)
    elif algorithm == "bruteforce":
        source = enumerate_preorders_bruteforce(n)
    else:
        raise SpaceError(f"unknown enumeration algorithm {algorithm!r}")
    for rows in source:
        space = FiniteSpace(rows, _validated=True)
        if up_to_iso:
            canon = canonical_form(space)
            if canon.up != space.up:
                continue
            yield SpaceCatalogEntry(space, space_id(space), space_id(canon))
        else:
            yield SpaceCatalogEntry(space, space_id(space))


def all_spaces_up_to(max_n: int) -> Iterator[FiniteSpace]:
    """Every labeled space with 1 <= n <= max_n, enumeration order."""
    for n in range(1, max_n + 1):
        for entry in enumerate_topologies(n):
            yield entry.space
