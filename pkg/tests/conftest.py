import random

import pytest
from hypothesis import strategies as st

from ptfn import validate_set

move_lists = st.lists(st.integers(min_value=1, max_value=20), min_size=1, max_size=6)


@pytest.fixture
def rng():
    return random.Random(20261015)


def random_set(rng, max_size=6, max_move=20):
    return validate_set(rng.sample(range(1, max_move + 1), rng.randint(1, max_size)))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
