import pytest

from ptfn import BoundExceeded, Label, PlayConvention, SumOfTwo, Wythoff, minimax_label_1d, minimax_label_grid, validate_set

P, N = Label.P, Label.N
S = validate_set([1, 3, 7, 8])


def test_1d_examples():
    assert minimax_label_1d(S, 0, PlayConvention.NORMAL) is P
    assert minimax_label_1d(S, 0, PlayConvention.MISERE) is N
    assert minimax_label_1d(S, 8, "normal") is N


def test_1d_deep_position_without_recursion_limit():
    # a recursive oracle would blow the default stack here
    assert minimax_label_1d(validate_set([1]), 20000) is P


def test_1d_deterministic_and_memo_reuse():
    memo = {}
    first = [minimax_label_1d(S, i, "normal", memo) for i in range(50)]
    again = [minimax_label_1d(S, i, "normal") for i in range(50)]
    assert first == again


def test_grid_examples():
    one = validate_set([1])
    assert minimax_label_grid(SumOfTwo(S, one), 0, 0) is P
    assert minimax_label_grid(Wythoff(), 0, 0) is P
    assert minimax_label_grid(Wythoff(), 1, 2) is P
    assert minimax_label_grid(SumOfTwo(one, one), 1, 0) is N


def test_grid_bound():
    with pytest.raises(BoundExceeded):
        minimax_label_grid(Wythoff(), 201, 0)


def test_negative_positions():
    with pytest.raises(ValueError):
        minimax_label_1d(S, -1)
    with pytest.raises(ValueError):
        minimax_label_grid(Wythoff(), -1, 0)


def test_oracle_independent_of_solvers():
    import ast

    import ptfn.oracle as oracle

    tree = ast.parse(open(oracle.__file__).read())
    imported = set()
    for node in ast.walk(tree):
        if isinstance(node, ast.ImportFrom):
            imported |= {(node.module, a.name) for a in node.names}
    assert {m for m, _ in imported} <= {"__future__", "typing", "core", "multipile"}
    # only the rule types come from multipile
    assert {n for m, n in imported if m == "multipile"} == {"SumOfTwo", "Wythoff"}
