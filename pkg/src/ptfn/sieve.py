"""PTFN forward sieve for a single pile.

Positions are scanned in ascending order. A position that nobody has marked
by the time the scan reaches it is a P-position, and every position one legal
move above it is marked N.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    IndexOutOfRange,
    Label,
    PlayConvention,
    SubtractionSet,
    check_entries,
    check_pile,
)

_P = 0
_N = 1


@dataclass(frozen=True, eq=False)
class PositionTable:
    """P/N labels for positions 0..n of one pile.

    ``bits`` holds one byte per position, 0 for P and 1 for N.
    """

    set: SubtractionSet
    n: int
    convention: PlayConvention
    bits: bytes = field(repr=False)

    def __post_init__(self):
        if len(self.bits) != self.n + 1:
            raise ValueError("bits must have length n+1")

    def __len__(self):
        return self.n + 1

    def __getitem__(self, i: int) -> Label:
        if not 0 <= i <= self.n:
            raise IndexOutOfRange(f"position {i} outside 0..{self.n}")
        return Label.N if self.bits[i] else Label.P

    def __eq__(self, other):
        if not isinstance(other, PositionTable):
            return NotImplemented
        return (
            self.set == other.set
            and self.n == other.n
            and self.convention == other.convention
            and self.bits == other.bits
        )

    def __hash__(self):
        return hash((self.set, self.n, self.convention, self.bits))

    @property
    def labels(self) -> list[Label]:
        return [Label.N if b else Label.P for b in self.bits]

    def p_positions(self) -> list[int]:
        out = []
        i = self.bits.find(_P)
        while i != -1:
            out.append(i)
            i = self.bits.find(_P, i + 1)
        return out

    def as_string(self) -> str:
        return self.bits.translate(bytes.maketrans(b"\x00\x01", b"PN")).decode()


def _sieve(moves: tuple[int, ...], n: int, premark: int) -> tuple[bytearray, int]:
    """Run the sieve, returning (bits, number of marking steps).

    ``premark`` positions 0..premark-1 start out marked N.
    """
    x = bytearray(n + 1)
    x[: min(premark, n + 1)] = b"\x01" * min(premark, n + 1)
    marks = 0
    # bytearray.find jumps straight to the next unmarked position; skipped
    # positions are already N, so this matches the plain ascending scan.
    i = x.find(_P)
    while i != -1:
        for s in moves:
            j = i + s
            if j > n:
                break
            x[j] = _N
            marks += 1
        i = x.find(_P, i + 1)
    return x, marks


def ptfn_normal(set: SubtractionSet, n: int) -> PositionTable:
    n = check_pile(n)
    check_entries(n + 1)
    bits, _ = _sieve(set.moves, n, 0)
    return PositionTable(set, n, PlayConvention.NORMAL, bytes(bits))


def ptfn_misere(set: SubtractionSet, n: int) -> PositionTable:
    """Misère variant: positions below the smallest move have no legal move
    and are pre-marked N before the scan."""
    n = check_pile(n)
    check_entries(n + 1)
    bits, _ = _sieve(set.moves, n, set.s1)
    return PositionTable(set, n, PlayConvention.MISERE, bytes(bits))


def ptfn_counted(set: SubtractionSet, n: int, convention=PlayConvention.NORMAL):
    """Like ptfn_normal/ptfn_misere but also return the marking-step count."""
    n = check_pile(n)
    check_entries(n + 1)
    premark = set.s1 if convention == PlayConvention.MISERE else 0
    bits, marks = _sieve(set.moves, n, premark)
    return PositionTable(set, n, PlayConvention(convention), bytes(bits)), marks


def solve(set: SubtractionSet, n: int, convention=PlayConvention.NORMAL) -> PositionTable:
    if PlayConvention(convention) == PlayConvention.MISERE:
        return ptfn_misere(set, n)
    return ptfn_normal(set, n)
