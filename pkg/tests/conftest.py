import pytest
from hypothesis import strategies as st

from crossunion.family import SetFamily

ACCEPTANCE_LINES: list[str] = []


@st.composite
def families(draw, n_min=1, n_max=8, n=None):
    if n is None:
        n = draw(st.integers(n_min, n_max))
    members = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=24))
    return SetFamily(n, tuple(members))


@st.composite
def family_pairs(draw, n_min=1, n_max=8):
    n = draw(st.integers(n_min, n_max))
    return draw(families(n=n)), draw(families(n=n))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def fam():
    def make(n, *sets):
        return SetFamily.from_sets(n, sets)

    return make
