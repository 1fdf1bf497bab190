"""Whole-permutation diagnostics: bijectivity audits, cycle structure, scatter data."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .coding import (
    MAX_TABLE_ENTRIES,
    CodingParams,
    PermutationTable,
    iter_codes,
)
from .errors import EnumerationBoundExceeded


@dataclass(frozen=True)
class AuditResult:
    """Outcome of a full-range duplicate scan; collision holds the first offending pair."""

    params: CodingParams
    ok: bool
    collision: tuple[int, int] | None = None


@dataclass(frozen=True)
class CycleReport:
    """Cycle decomposition of a block permutation."""

    params: CodingParams
    cycle_count: int
    cycle_lengths: tuple[int, ...]
    fixed_points: tuple[int, ...]
    order: int


@dataclass(frozen=True)
class ScatterData:
    """All (x', encode(x')) pairs, ready for plotting or CSV export."""

    params: CodingParams
    points: tuple[tuple[int, int], ...]


def audit_bijectivity(
    params: CodingParams, max_entries: int = MAX_TABLE_ENTRIES
) -> AuditResult:
    """Scan every output once and report the first duplicate, if any.

    Memory is one byte per block value. On a duplicate the earlier preimage
    is found by rescanning the prefix; that path never runs for a correct
    implementation, so it is kept simple rather than fast.
    """
    size = params.size()
    if size > max_entries:
        raise EnumerationBoundExceeded(
            f"audit would enumerate {size} entries; bound is {max_entries}"
        )
    seen = bytearray(size)
    for x, z in enumerate(iter_codes(params)):
        if seen[z]:
            for y, zz in enumerate(iter_codes(params)):
                if zz == z:
                    return AuditResult(params, ok=False, collision=(y, x))
        seen[z] = 1
    return AuditResult(params, ok=True)


def cycle_structure(table: PermutationTable) -> CycleReport:
    """Cycle decomposition; order is the lcm of the cycle lengths."""
    image = table.image
    size = len(image)
    visited = bytearray(size)
    lengths: list[int] = []
    fixed: list[int] = []
    for start in range(size):
        if visited[start]:
            continue
        length = 0
        x = start
        while not visited[x]:
            visited[x] = 1
            x = image[x]
            length += 1
        lengths.append(length)
        if length == 1:
            fixed.append(start)
    lengths.sort()
    return CycleReport(
        params=table.params,
        cycle_count=len(lengths),
        cycle_lengths=tuple(lengths),
        fixed_points=tuple(fixed),
        order=math.lcm(*lengths),
    )


def export_scatter(
    params: CodingParams, max_entries: int = MAX_TABLE_ENTRIES
) -> ScatterData:
    """Materialize every (x', code) pair for plotting."""
    size = params.size()
    if size > max_entries:
        raise EnumerationBoundExceeded(
            f"scatter would enumerate {size} entries; bound is {max_entries}"
        )
    points = tuple((x, z) for x, z in enumerate(iter_codes(params)))
    return ScatterData(params=params, points=points)
