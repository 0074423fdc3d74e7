"""Two-pile PTFN grids: sums of two subtraction games and Wythoff's game."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt
from typing import NamedTuple, Union

from .core import (
    MAX_POSITION,
    IndexOutOfRange,
    Label,
    PlayConvention,
    SubtractionSet,
    TableTooLarge,
    check_entries,
    check_pile,
)
from .grundy import grundy_table

WYTHOFF_MAX_SIDE = 2000


@dataclass(frozen=True)
class SumOfTwo:
    setA: SubtractionSet
    setB: SubtractionSet

    name = "sum-of-two"


@dataclass(frozen=True)
class Wythoff:
    name = "wythoff"


GridRule = Union[SumOfTwo, Wythoff]


@dataclass(frozen=True, eq=False)
class GridTable:
    """Labels for every (a, b) with 0 <= a <= nA, 0 <= b <= nB.

    Stored row-major in ``bits`` (row a, column b), 0 for P and 1 for N.
    """

    rule: GridRule
    nA: int
    nB: int
    bits: bytes = field(repr=False)
    convention: PlayConvention = PlayConvention.NORMAL

    def __post_init__(self):
        if len(self.bits) != (self.nA + 1) * (self.nB + 1):
            raise ValueError("bits must have (nA+1)*(nB+1) entries")

    @property
    def width(self) -> int:
        return self.nB + 1

    def __getitem__(self, ab: tuple[int, int]) -> Label:
        a, b = ab
        if not (0 <= a <= self.nA and 0 <= b <= self.nB):
            raise IndexOutOfRange(f"cell {ab} outside grid {self.nA}x{self.nB}")
        return Label.N if self.bits[a * self.width + b] else Label.P

    def __eq__(self, other):
        if not isinstance(other, GridTable):
            return NotImplemented
        return (self.rule, self.nA, self.nB, self.bits) == (other.rule, other.nA, other.nB, other.bits)

    @property
    def labels(self) -> list[list[Label]]:
        w = self.width
        return [
            [Label.N if v else Label.P for v in self.bits[a * w : (a + 1) * w]]
            for a in range(self.nA + 1)
        ]

    def p_cells(self) -> list[tuple[int, int]]:
        out = []
        i = self.bits.find(0)
        while i != -1:
            out.append(divmod(i, self.width))
            i = self.bits.find(0, i + 1)
        return out

    def with_flipped(self, a: int, b: int) -> "GridTable":
        """Copy with one cell's label inverted (for fault-injection tests)."""
        x = bytearray(self.bits)
        x[a * self.width + b] ^= 1
        return GridTable(self.rule, self.nA, self.nB, bytes(x), self.convention)


def _grid_size(nA: int, nB: int) -> int:
    nA = check_pile(nA, "nA")
    nB = check_pile(nB, "nB")
    check_entries((nA + 1) * (nB + 1))
    return (nA + 1) * (nB + 1)


def two_pile_counted(setA: SubtractionSet, nA: int, setB: SubtractionSet, nB: int):
    size = _grid_size(nA, nB)
    w = nB + 1
    x = bytearray(size)
    marks = 0
    pos = x.find(0)
    while pos != -1:
        i, j = divmod(pos, w)
        for s in setA.moves:
            if i + s > nA:
                break
            x[pos + s * w] = 1
            marks += 1
        for t in setB.moves:
            if j + t > nB:
                break
            x[pos + t] = 1
            marks += 1
        pos = x.find(0, pos + 1)
    return GridTable(SumOfTwo(setA, setB), nA, nB, bytes(x)), marks


def ptfn_two_pile(setA: SubtractionSet, nA: int, setB: SubtractionSet, nB: int) -> GridTable:
    return two_pile_counted(setA, nA, setB, nB)[0]


def wythoff_sieve(nA: int, nB: int, max_side: int = WYTHOFF_MAX_SIDE) -> GridTable:
    """Sieve for Wythoff's game.

    Every P cell marks its whole row and column beyond it plus the diagonal.
    Sides above ``max_side`` are refused since the naive marking is cubic in
    the worst case.
    """
    if max(nA, nB) > max_side:
        raise TableTooLarge(f"Wythoff grid side exceeds {max_side}")
    size = _grid_size(nA, nB)
    w = nB + 1
    x = bytearray(size)
    pos = x.find(0)
    while pos != -1:
        i, j = divmod(pos, w)
        # (i, j+k): rest of the row
        x[pos + 1 : i * w + w] = b"\x01" * (nB - j)
        # (i+k, j): rest of the column
        x[pos + w :: w] = b"\x01" * (nA - i)
        # (i+k, j+k): diagonal
        m = min(nA - i, nB - j)
        if m:
            start = pos + w + 1
            x[start : start + m * (w + 1) : w + 1] = b"\x01" * m
        pos = x.find(0, pos + 1)
    return GridTable(Wythoff(), nA, nB, bytes(x))


class BeattyPair(NamedTuple):
    k: int
    a: int
    b: int


def wythoff_analytic(k_max: int) -> list[BeattyPair]:
    """Wythoff P-positions (floor(k*phi), floor(k*phi^2)) for k = 0..k_max.

    Exact: floor(k*phi) = (k + isqrt(5k^2)) // 2 because 5k^2 is never a
    perfect square for k >= 1, and floor(k*phi^2) = floor(k*phi) + k.
    """
    if k_max < 0:
        raise ValueError("k_max must be non-negative")
    if 5 * k_max * k_max > MAX_POSITION:
        raise OverflowError(f"5*k^2 exceeds 64-bit range for k_max={k_max}")
    out = []
    for k in range(k_max + 1):
        a = (k + isqrt(5 * k * k)) // 2
        out.append(BeattyPair(k, a, a + k))
    return out


def wythoff_p_cells(nA: int, nB: int) -> set[tuple[int, int]]:
    """Analytic P cells inside the (nA+1) x (nB+1) grid."""
    cells = set()
    # a_k >= k, so k up to max(nA, nB) covers every pair touching the grid
    for _, a, b in wythoff_analytic(max(nA, nB)):
        if a <= nA and b <= nB:
            cells.add((a, b))
        if b <= nA and a <= nB:
            cells.add((b, a))
    return cells


def grid_cross_check(grid: GridTable) -> list[tuple[int, int]]:
    """Cells where an independent method disagrees with the sieved grid.

    Sums are checked against the XOR of component Grundy values; Wythoff
    grids against the Beatty pairs and for mirror symmetry.
    """
    nA, nB = grid.nA, grid.nB
    w = grid.width
    bad = []
    if isinstance(grid.rule, SumOfTwo):
        ga = grundy_table(grid.rule.setA, nA).values
        gb = grundy_table(grid.rule.setB, nB).values
        for a in range(nA + 1):
            row = a * w
            for b in range(nB + 1):
                expect_n = (ga[a] ^ gb[b]) != 0
                if bool(grid.bits[row + b]) != expect_n:
                    bad.append((a, b))
        return bad

    expected_p = wythoff_p_cells(nA, nB)
    for a in range(nA + 1):
        row = a * w
        for b in range(nB + 1):
            if bool(grid.bits[row + b]) == ((a, b) in expected_p):
                bad.append((a, b))
    flagged = set(bad)
    for a in range(min(nA, nB) + 1):
        for b in range(a + 1, min(nA, nB) + 1):
            if (a, b) in flagged or (b, a) in flagged:
                continue
            if grid.bits[a * w + b] != grid.bits[b * w + a]:
                bad.append((a, b))
    return sorted(bad)
