"""Batch census of invariants and minimal winning horizons.

Each enumerated space becomes one row: the cardinal invariants plus the
least horizon at which the relevant player wins each game.  Rows carry
cross-identities that must hold on every finite space; violations are
collected into a machine-readable report instead of being swallowed.

Note: the identities asserted here are the ones that are actually
theorems.  The weak-Lindelof cluster (cover-selection for two,
point-open for one) and the dense-game cluster (dense-dense and cellular
selection for two, open-open for one) each collapse to a single value,
and the first is bounded by the second, but the two clusters genuinely
differ on some spaces, the three-point fan being the smallest example.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterable, Iterator, Sequence

from . import invariants
from .games import (
    OPEN_OPEN,
    POINT_OPEN,
    REDUCED,
    SEL_C_OD,
    SEL_O_OD,
    SEL_OD_OD,
    Player,
    minimal_winning_horizon,
)
from .spacegen import SpaceCatalogEntry, enumerate_topologies

CSV_COLUMNS = (
    "space_id",
    "n",
    "cellularity",
    "density",
    "pi_weight",
    "wl_degree",
    "h_two_SelOOD",
    "h_two_SelCOD",
    "h_two_SelODOD",
    "h_one_OpenOpen",
    "h_one_PointOpen",
)


@dataclass(frozen=True)
class CensusRow:
    space_id: str
    n: int
    cellularity: int
    density: int
    pi_weight: int
    wl_degree: int
    h_two_SelOOD: int | None
    h_two_SelCOD: int | None
    h_two_SelODOD: int | None
    h_one_OpenOpen: int | None
    h_one_PointOpen: int | None
    max_h: int

    def cell(self, column: str) -> str:
        value = getattr(self, column)
        if column.startswith("h_") and value is None:
            return f"none@{self.max_h}"
        return str(value)

    def to_json(self) -> dict:
        return {c: getattr(self, c) for c in CSV_COLUMNS}

    def violations(self) -> list[str]:
        """The cross-identities every finite space satisfies."""
        out = []
        wl_cluster = (self.wl_degree, self.h_two_SelOOD, self.h_one_PointOpen)
        if len(set(wl_cluster)) != 1:
            out.append(
                f"{self.space_id}: wl_degree, h_two_SelOOD, h_one_PointOpen "
                f"differ: {wl_cluster}"
            )
        dense_cluster = (self.h_two_SelCOD, self.h_two_SelODOD, self.h_one_OpenOpen)
        if len(set(dense_cluster)) != 1:
            out.append(
                f"{self.space_id}: h_two_SelCOD, h_two_SelODOD, h_one_OpenOpen "
                f"differ: {dense_cluster}"
            )
        if self.h_two_SelODOD is not None and self.h_two_SelODOD > self.cellularity:
            out.append(
                f"{self.space_id}: h_two_SelODOD {self.h_two_SelODOD} exceeds "
                f"cellularity {self.cellularity}"
            )
        if (
            self.wl_degree is not None
            and self.h_one_OpenOpen is not None
            and self.wl_degree > self.h_one_OpenOpen
        ):
            out.append(
                f"{self.space_id}: wl_degree {self.wl_degree} exceeds "
                f"h_one_OpenOpen {self.h_one_OpenOpen}"
            )
        return out


def compute_row(entry: SpaceCatalogEntry, max_h: int, mode: str = REDUCED) -> CensusRow:
    space = entry.space
    report = invariants.report(space)
    return CensusRow(
        space_id=entry.id,
        n=space.n,
        cellularity=report.cellularity,
        density=report.density,
        pi_weight=report.pi_weight,
        wl_degree=report.wl_degree,
        h_two_SelOOD=minimal_winning_horizon(space, SEL_O_OD, Player.TWO, max_h, mode),
        h_two_SelCOD=minimal_winning_horizon(space, SEL_C_OD, Player.TWO, max_h, mode),
        h_two_SelODOD=minimal_winning_horizon(space, SEL_OD_OD, Player.TWO, max_h, mode),
        h_one_OpenOpen=minimal_winning_horizon(space, OPEN_OPEN, Player.ONE, max_h, mode),
        h_one_PointOpen=minimal_winning_horizon(space, POINT_OPEN, Player.ONE, max_h, mode),
        max_h=max_h,
    )


def _worker(args: tuple[SpaceCatalogEntry, int, str]) -> CensusRow:
    entry, max_h, mode = args
    return compute_row(entry, max_h, mode)


def census_rows(
    entries: Iterable[SpaceCatalogEntry],
    max_h: int,
    mode: str = REDUCED,
    workers: int = 1,
) -> list[CensusRow]:
    """Compute all rows, order-stabilized by space id.

    Workers share nothing: each process owns its solver memos, and rows
    are sorted afterwards so output does not depend on scheduling.
    """
    jobs = [(e, max_h, mode) for e in entries]
    if workers > 1:
        with Pool(workers) as pool:
            rows = pool.map(_worker, jobs, chunksize=16)
    else:
        rows = [_worker(j) for j in jobs]
    return sorted(rows, key=lambda r: r.space_id)


def run_census(
    n: int,
    max_h: int,
    mode: str = REDUCED,
    workers: int = 1,
    up_to_iso: bool = False,
) -> tuple[list[CensusRow], list[str]]:
    entries = list(enumerate_topologies(n, up_to_iso=up_to_iso))
    rows = census_rows(entries, max_h, mode, workers)
    violations = [v for row in rows for v in row.violations()]
    return rows, violations


def rows_to_csv(rows: Sequence[CensusRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([row.cell(c) for c in CSV_COLUMNS])
    return buf.getvalue()


def rows_to_json_lines(rows: Sequence[CensusRow]) -> Iterator[str]:
    for row in rows:
        yield json.dumps(row.to_json(), sort_keys=True)
