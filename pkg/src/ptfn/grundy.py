"""Sprague-Grundy baseline solver for subtraction games."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .core import Label, PlayConvention, SubtractionSet, check_entries, check_pile
from .sieve import PositionTable


@dataclass(frozen=True)
class GrundyTable:
    set: SubtractionSet
    n: int
    values: tuple[int, ...] = field(repr=False)

    def __post_init__(self):
        if len(self.values) != self.n + 1:
            raise ValueError("values must have length n+1")

    def __len__(self):
        return self.n + 1

    def __getitem__(self, i: int) -> int:
        return self.values[i]


def _grundy_values(moves: tuple[int, ...], n: int) -> tuple[list[int], int]:
    """Return (values, number of mex evaluations)."""
    k = len(moves)
    values = [0] * (n + 1)
    # G(i) <= k, so presence flags for 0..k are enough; reused across positions
    seen = [False] * (k + 1)
    evals = 0
    for i in range(n + 1):
        for s in moves:
            if s > i:
                break
            seen[values[i - s]] = True
        g = 0
        while seen[g]:
            g += 1
        values[i] = g
        evals += 1
        for s in moves:
            if s > i:
                break
            seen[values[i - s]] = False
    return values, evals


def grundy_table(set: SubtractionSet, n: int) -> GrundyTable:
    n = check_pile(n)
    check_entries(n + 1)
    values, _ = _grundy_values(set.moves, n)
    return GrundyTable(set, n, tuple(values))


def grundy_counted(set: SubtractionSet, n: int) -> tuple[GrundyTable, int]:
    n = check_pile(n)
    check_entries(n + 1)
    values, evals = _grundy_values(set.moves, n)
    return GrundyTable(set, n, tuple(values)), evals


def labels_from_grundy(g: GrundyTable) -> PositionTable:
    bits = bytes(1 if v else 0 for v in g.values)
    return PositionTable(g.set, g.n, PlayConvention.NORMAL, bits)


def sum_grundy(components: Sequence[tuple[SubtractionSet, int]]) -> tuple[list[int], int]:
    """Grundy value of each component and their XOR."""
    if not components:
        raise ValueError("at least one component is required")
    values = []
    total = 0
    for s, n in components:
        g = grundy_table(s, n).values[n]
        values.append(g)
        total ^= g
    return values, total


def sum_label_xor(components: Sequence[tuple[SubtractionSet, int]]) -> Label:
    _, total = sum_grundy(components)
    return Label.P if total == 0 else Label.N
