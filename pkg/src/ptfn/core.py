"""Shared domain types for subtraction games: move sets, labels, mex."""
from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from typing import Iterable

DEFAULT_TABLE_CAP = 10**8
MAX_POSITION = 2**63 - 1


class GameError(Exception):
    """Base class for domain errors. The class name is what the CLI reports."""


class EmptySet(GameError):
    pass


class NonPositiveEntry(GameError):
    def __init__(self, value):
        super().__init__(f"subtraction set entries must be >= 1, got {value}")
        self.value = value


class TableTooLarge(GameError):
    pass


class IndexOutOfRange(GameError, IndexError):
    pass


class Label(str, enum.Enum):
    P = "P"
    N = "N"

    def __str__(self):
        return self.value


class PlayConvention(str, enum.Enum):
    NORMAL = "normal"
    MISERE = "misere"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SubtractionSet:
    moves: tuple[int, ...]

    def __post_init__(self):
        if not self.moves:
            raise EmptySet("subtraction set is empty")
        prev = 0
        for m in self.moves:
            if m < 1:
                raise NonPositiveEntry(m)
            if m <= prev:
                raise ValueError("moves must be strictly increasing; use validate_set")
            prev = m

    @property
    def s1(self) -> int:
        return self.moves[0]

    @property
    def sk(self) -> int:
        return self.moves[-1]

    def __len__(self):
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def __str__(self):
        return "{" + ",".join(map(str, self.moves)) + "}"


def validate_set(raw: Iterable[int]) -> SubtractionSet:
    """Sort and deduplicate ``raw`` into a SubtractionSet.

    Duplicates collapse silently; order of the input does not matter.
    """
    values = [int(v) for v in raw]
    if not values:
        raise EmptySet("subtraction set is empty")
    for v in values:
        if v <= 0:
            raise NonPositiveEntry(v)
    return SubtractionSet(tuple(sorted(set(values))))


def parse_set(text: str) -> SubtractionSet:
    """Parse the comma-separated form used on the command line, e.g. ``1,3,7,8``."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    try:
        values = [int(p) for p in parts]
    except ValueError as exc:
        raise ValueError(f"invalid subtraction set {text!r}") from exc
    return validate_set(values)


def mex(values: Iterable[int]) -> int:
    seen = set(values)
    m = 0
    while m in seen:
        m += 1
    return m


def table_cap() -> int:
    """Maximum number of table entries; PTFN_TABLE_CAP overrides the default."""
    env = os.environ.get("PTFN_TABLE_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"PTFN_TABLE_CAP must be an integer, got {env!r}") from None
    return DEFAULT_TABLE_CAP


def check_pile(n: int, name: str = "n") -> int:
    n = int(n)
    if n < 0:
        raise ValueError(f"{name} must be non-negative, got {n}")
    if n > MAX_POSITION:
        raise OverflowError(f"{name} exceeds the 64-bit position range")
    return n


def check_entries(entries: int) -> None:
    cap = table_cap()
    if entries > cap:
        raise TableTooLarge(f"table of {entries} entries exceeds cap {cap} (set PTFN_TABLE_CAP)")
