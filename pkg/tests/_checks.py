"""Invariant checkers shared by the tests. Independent of the sieve code paths."""
from ptfn import Label


def recursion_violations(table, start=0, stop=None):
    """Positions in [start, stop) breaking the P/N recursion for the table's convention."""
    moves = table.set.moves
    s1 = moves[0]
    misere = str(table.convention) == "misere"
    stop = table.n + 1 if stop is None else stop
    bad = []
    for i in range(start, stop):
        if misere and i < s1:
            if table[i] is not Label.N:
                bad.append(i)
            continue
        reaches_p = any(table[i - s] is Label.P for s in moves if s <= i)
        if (table[i] is Label.N) != reaches_p:
            bad.append(i)
    return bad


def grid_recursion_violations(grid, followers):
    bad = []
    for a in range(grid.nA + 1):
        for b in range(grid.nB + 1):
            reaches_p = any(grid[q] is Label.P for q in followers(a, b))
            if (grid[a, b] is Label.N) != reaches_p:
                bad.append((a, b))
    return bad


def sum_followers(setA, setB):
    def f(a, b):
        return [(a - s, b) for s in setA.moves if s <= a] + [(a, b - t) for t in setB.moves if t <= b]

    return f


def wythoff_followers(a, b):
    out = [(a - k, b) for k in range(1, a + 1)]
    out += [(a, b - k) for k in range(1, b + 1)]
    out += [(a - k, b - k) for k in range(1, min(a, b) + 1)]
    return out
