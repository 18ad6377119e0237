import random

import pytest
from hypothesis import strategies as st

from thompsonf.forest import LEAF, PointedForest
from thompsonf.sampling import random_tree

_ACCEPTANCE: list[str] = []


def record(line: str) -> None:
    _ACCEPTANCE.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)


@st.composite
def trees(draw, max_carets=8):
    n = draw(st.integers(0, max_carets))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_tree(random.Random(seed), n)


@st.composite
def pforests(draw, max_carets=10, max_trees=5):
    ts = draw(st.lists(trees(max_carets=4), max_size=max_trees))
    ts = ts[: max_trees]
    total = 0
    kept = []
    for t in ts:
        if total + t.carets > max_carets:
            t = LEAF
        total += t.carets
        kept.append(t)
    pointer = draw(st.integers(0, len(kept) + 2))
    return PointedForest(kept, pointer)


words = st.lists(st.integers(0, 5), max_size=10).map(tuple)


@pytest.fixture
def rng():
    return random.Random(12345)
