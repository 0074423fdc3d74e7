"""Brute-force minimax ground truth.

Deliberately naive and independent of the sieves and the Grundy solver: it
evaluates positions top-down straight from the P/N definition. An explicit
worklist replaces recursion so deep positions do not hit the stack limit.
"""
from __future__ import annotations

from typing import Callable, Hashable, Iterable

from .core import GameError, Label, PlayConvention, SubtractionSet
from .multipile import SumOfTwo, Wythoff

GRID_BOUND = 200


class BoundExceeded(GameError):
    pass


def _solve(root: Hashable, followers: Callable[[Hashable], Iterable], terminal: Label, memo: dict) -> Label:
    stack = [root]
    while stack:
        pos = stack[-1]
        if pos in memo:
            stack.pop()
            continue
        nxt = list(followers(pos))
        if not nxt:
            memo[pos] = terminal
            stack.pop()
            continue
        pending = [q for q in nxt if q not in memo]
        if pending:
            stack.extend(pending)
            continue
        memo[pos] = Label.N if any(memo[q] is Label.P for q in nxt) else Label.P
        stack.pop()
    return memo[root]


def minimax_label_1d(set: SubtractionSet, i: int, convention=PlayConvention.NORMAL, memo: dict | None = None) -> Label:
    """Label of pile size ``i``.

    Pass the same ``memo`` dict across calls to reuse work; it must only ever
    be shared between calls with the same set and convention.
    """
    if i < 0:
        raise ValueError("position must be non-negative")
    convention = PlayConvention(convention)
    terminal = Label.P if convention == PlayConvention.NORMAL else Label.N
    moves = set.moves

    def followers(x):
        return [x - s for s in moves if s <= x]

    return _solve(i, followers, terminal, {} if memo is None else memo)


def minimax_label_grid(rule, a: int, b: int, memo: dict | None = None) -> Label:
    """Normal-play label of cell (a, b) under a two-pile rule."""
    if a < 0 or b < 0:
        raise ValueError("positions must be non-negative")
    if a > GRID_BOUND or b > GRID_BOUND:
        raise BoundExceeded(f"grid oracle limited to {GRID_BOUND} per pile")

    if isinstance(rule, SumOfTwo):
        ma, mb = rule.setA.moves, rule.setB.moves

        def followers(p):
            x, y = p
            return [(x - s, y) for s in ma if s <= x] + [(x, y - t) for t in mb if t <= y]

    elif isinstance(rule, Wythoff):

        def followers(p):
            x, y = p
            out = [(x - k, y) for k in range(1, x + 1)]
            out += [(x, y - k) for k in range(1, y + 1)]
            out += [(x - k, y - k) for k in range(1, min(x, y) + 1)]
            return out

    else:
        raise TypeError(f"unknown grid rule {rule!r}")

    return _solve((a, b), followers, Label.P, {} if memo is None else memo)
