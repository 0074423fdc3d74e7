"""Winning-move advice, Grundy periodicity and the PTFN vs Sprague-Grundy benchmark."""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass
from typing import Union

from .core import GameError, IndexOutOfRange, Label, PlayConvention, SubtractionSet
from .grundy import GrundyTable, grundy_counted, labels_from_grundy
from .sieve import PositionTable, ptfn_counted


class TableTooShort(GameError):
    pass


class AgreementFailure(GameError):
    pass


@dataclass(frozen=True)
class WinningMove:
    amount: int
    kind = "winning_move"


@dataclass(frozen=True)
class NoWinningMove:
    kind = "no_winning_move"


@dataclass(frozen=True)
class NoLegalMove:
    kind = "no_legal_move"


MoveAdvice = Union[WinningMove, NoWinningMove, NoLegalMove]


def advise_move(table: PositionTable, i: int) -> MoveAdvice:
    """Return the smallest move from ``i`` that reaches a P-position, if any."""
    if not 0 <= i <= table.n:
        raise IndexOutOfRange(f"position {i} outside 0..{table.n}")
    legal = [s for s in table.set.moves if s <= i]
    if not legal:
        return NoLegalMove()
    if table[i] is Label.N:
        for s in legal:
            if table[i - s] is Label.P:
                return WinningMove(s)
    return NoWinningMove()


@dataclass(frozen=True)
class PeriodReport:
    preperiod: int
    period: int
    verified: bool

    def to_dict(self):
        return asdict(self)


def _preperiod(values, p: int) -> int:
    """Smallest p0 with values[i] == values[i+p] for all i in [p0, len-p)."""
    i = len(values) - p
    while i > 0 and values[i - 1] == values[i - 1 + p]:
        i -= 1
    return i


def detect_period(g: GrundyTable) -> PeriodReport:
    """Find the eventual period of a Grundy sequence.

    A candidate (p0, p) fits when the matched tail covers at least one full
    period. It counts as verified when the match runs at least s_k positions
    past p0 + p, s_k being the largest move (the recurrence's look-back).
    Returns the first verified candidate by increasing period, else the first
    fitting one marked unverified. Grundy sequences of finite subtraction sets
    are always eventually periodic, so finding no candidate at all means the
    table is too short and raises TableTooShort.
    """
    values = g.values
    length = len(values)
    sk = g.set.sk
    if length < 2 + sk:
        raise TableTooShort(f"need at least {2 + sk} values to verify any period, have {length}")
    fallback = None
    for p in range(1, length // 2 + 1):
        p0 = _preperiod(values, p)
        end = length - p
        if end - p0 < p:
            continue
        if end >= p0 + p + sk:
            return PeriodReport(p0, p, True)
        if fallback is None:
            fallback = PeriodReport(p0, p, False)
    if fallback is None:
        raise TableTooShort(f"no period fits within {length} values")
    return fallback


@dataclass(frozen=True)
class BenchReport:
    set: SubtractionSet
    n: int
    repetitions: int
    ptfn_marks: int
    sg_mex_evals: int
    ptfn_time: float
    sg_time: float
    agreement: bool

    def to_dict(self):
        d = asdict(self)
        d["set"] = list(self.set.moves)
        return d


def bench_compare(set: SubtractionSet, n: int, repetitions: int = 5) -> BenchReport:
    """Time both solvers (best of ``repetitions``) and count their basic steps."""
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    ptfn_time = sg_time = float("inf")
    for _ in range(repetitions):
        t0 = time.perf_counter()
        table, marks = ptfn_counted(set, n, PlayConvention.NORMAL)
        ptfn_time = min(ptfn_time, time.perf_counter() - t0)

        t0 = time.perf_counter()
        g, evals = grundy_counted(set, n)
        sg_table = labels_from_grundy(g)
        sg_time = min(sg_time, time.perf_counter() - t0)

    if table != sg_table:
        raise AgreementFailure(f"PTFN and Sprague-Grundy tables differ for {set}, n={n}")
    return BenchReport(set, n, repetitions, marks, evals, ptfn_time, sg_time, True)


def expected_marks(table: PositionTable) -> int:
    """Marking steps the sieve must perform: in-range successors of each P-position."""
    return sum(sum(1 for s in table.set.moves if p + s <= table.n) for p in table.p_positions())
