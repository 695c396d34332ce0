import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from qrega.ga import Multivector, make_algebra

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"
GOLDEN = Path(__file__).resolve().parent / "golden"


@pytest.fixture
def g11():
    return make_algebra([1, -1], ["e1", "e2"])


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def golden_dir():
    return GOLDEN


def dyadic():
    # multiples of 1/4 in [-2, 2]: products and sums stay exact
    return st.integers(-8, 8).map(lambda k: k / 4)


@st.composite
def algebras(draw, max_dim=6):
    n = draw(st.integers(1, max_dim))
    squares = draw(st.lists(st.sampled_from([1, -1]), min_size=n, max_size=n))
    return make_algebra(squares, [f"e{i}" for i in range(1, n + 1)])


@st.composite
def multivectors(draw, algebra, max_terms=6):
    blades = draw(
        st.lists(st.integers(0, algebra.size - 1), max_size=max_terms, unique=True)
    )
    return Multivector(algebra, {b: draw(dyadic()) for b in blades})


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS):
        terminalreporter.write_line(line)
