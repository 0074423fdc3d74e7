import pytest

from ptfn import (
    BeattyPair,
    Label,
    SumOfTwo,
    TableTooLarge,
    Wythoff,
    grid_cross_check,
    grundy_table,
    minimax_label_grid,
    ptfn_two_pile,
    validate_set,
    wythoff_analytic,
    wythoff_sieve,
)
from ptfn.multipile import two_pile_counted, wythoff_p_cells

from _checks import grid_recursion_violations, sum_followers, wythoff_followers
from conftest import random_set

P, N = Label.P, Label.N
A = validate_set([1, 3, 7, 8])
B = validate_set([1, 2, 3, 4])


def test_two_pile_matches_xor_grid():
    grid = ptfn_two_pile(A, 15, B, 15)
    ga, gb = grundy_table(A, 15), grundy_table(B, 15)
    for a in range(16):
        for b in range(16):
            assert (grid[a, b] is P) == (ga[a] ^ gb[b] == 0)
    assert grid_cross_check(grid) == []


def test_two_pile_origin_is_p():
    assert ptfn_two_pile(A, 3, B, 0)[0, 0] is P
    assert ptfn_two_pile(validate_set([5]), 0, validate_set([2]), 0)[0, 0] is P


def test_two_pile_parity():
    one = validate_set([1])
    rule = SumOfTwo(one, one)
    grid = ptfn_two_pile(one, 2, one, 2)
    for a in range(3):
        for b in range(3):
            assert minimax_label_grid(rule, a, b) is (P if (a + b) % 2 == 0 else N)
            assert grid[a, b] is (P if (a + b) % 2 == 0 else N)


def test_two_pile_dimensions_and_rule():
    grid = ptfn_two_pile(A, 4, B, 7)
    assert (grid.nA, grid.nB) == (4, 7)
    assert len(grid.labels) == 5 and all(len(r) == 8 for r in grid.labels)
    assert grid.rule == SumOfTwo(A, B)


def test_two_pile_recursion_and_oracle(rng):
    for _ in range(5):
        a, b = random_set(rng), random_set(rng)
        grid = ptfn_two_pile(a, 40, b, 30)
        assert grid_recursion_violations(grid, sum_followers(a, b)) == []
        memo = {}
        for x in range(41):
            for y in range(31):
                assert grid[x, y] is minimax_label_grid(grid.rule, x, y, memo)


def test_two_pile_marks_bounded():
    grid, marks = two_pile_counted(A, 20, B, 20)
    assert marks <= (len(A) + len(B)) * len(grid.p_cells())


def test_two_pile_table_cap(monkeypatch):
    monkeypatch.setenv("PTFN_TABLE_CAP", "100")
    with pytest.raises(TableTooLarge):
        ptfn_two_pile(A, 10, B, 10)


def test_wythoff_examples():
    grid = wythoff_sieve(10, 10)
    assert grid[0, 0] is P
    assert grid[1, 2] is P and grid[2, 1] is P
    assert grid[1, 1] is N
    assert minimax_label_grid(Wythoff(), 1, 2) is P


def test_wythoff_symmetric_and_one_p_per_row():
    grid = wythoff_sieve(60, 60)
    for a in range(61):
        for b in range(61):
            assert grid[a, b] is grid[b, a]
    pairs = wythoff_analytic(60)
    partner = {}
    for _, a, b in pairs:
        partner[a] = b
        partner[b] = a
    for a in range(61):
        row_p = [b for b in range(61) if grid[a, b] is P]
        assert len(row_p) <= 1
        if partner.get(a, 10**9) <= 60:
            assert row_p == [partner[a]]


def test_wythoff_recursion_and_oracle():
    grid = wythoff_sieve(30, 25)
    assert grid_recursion_violations(grid, wythoff_followers) == []
    memo = {}
    for a in range(31):
        for b in range(26):
            assert grid[a, b] is minimax_label_grid(Wythoff(), a, b, memo)


def test_wythoff_rectangular_matches_analytic():
    grid = wythoff_sieve(40, 13)
    assert set(grid.p_cells()) == wythoff_p_cells(40, 13)
    assert grid_cross_check(grid) == []


def test_wythoff_side_cap():
    with pytest.raises(TableTooLarge):
        wythoff_sieve(2001, 5)
    wythoff_sieve(5, 5, max_side=5)


@pytest.mark.parametrize("k, a, b", [(0, 0, 0), (1, 1, 2), (2, 3, 5)])
def test_wythoff_analytic_examples(k, a, b):
    assert wythoff_analytic(k)[k] == BeattyPair(k, a, b)


def test_wythoff_analytic_properties():
    pairs = wythoff_analytic(2000)
    assert pairs[0] == (0, 0, 0)
    for prev, cur in zip(pairs, pairs[1:]):
        assert cur.a > prev.a
    for k, a, b in pairs:
        assert b == a + k
    # the lower and upper sequences partition the positive integers
    lows = {p.a for p in pairs[1:]}
    highs = {p.b for p in pairs[1:]}
    assert not lows & highs
    assert set(range(1, 2000)) <= lows | highs


def test_wythoff_analytic_matches_float_for_small_k():
    phi = (1 + 5**0.5) / 2
    for k, a, b in wythoff_analytic(1000):
        assert a == int(k * phi)
        assert b == int(k * phi * phi)


def test_wythoff_analytic_overflow():
    with pytest.raises(OverflowError):
        wythoff_analytic(2**31)
    with pytest.raises(ValueError):
        wythoff_analytic(-1)


def test_cross_check_wythoff_50():
    assert grid_cross_check(wythoff_sieve(50, 50)) == []


@pytest.mark.parametrize("cell", [(3, 4), (0, 0), (15, 15)])
def test_cross_check_detects_single_flip_sum(cell):
    grid = ptfn_two_pile(A, 15, B, 15).with_flipped(*cell)
    assert grid_cross_check(grid) == [cell]


@pytest.mark.parametrize("cell", [(3, 5), (4, 4), (20, 2)])
def test_cross_check_detects_single_flip_wythoff(cell):
    grid = wythoff_sieve(30, 30).with_flipped(*cell)
    assert grid_cross_check(grid) == [cell]
