import pytest
from hypothesis import strategies as st

from prolific.compositions import Composition, compositions_up_to

ACCEPTANCE_LINES = []


def compositions(min_parts=0, max_parts=8, max_part=6):
    return st.lists(st.integers(1, max_part), min_size=min_parts, max_size=max_parts).map(Composition)


def valid_patterns(max_inner=4, max_part=5):
    inner = st.lists(st.integers(1, max_part), max_size=max_inner)
    return st.one_of(
        st.just(Composition((1,))),
        inner.map(lambda xs: Composition((1, *xs, 1))),
    )


def small_valid_patterns(max_size):
    return [u for u in compositions_up_to(max_size) if u[0] == 1 and u[-1] == 1]


@pytest.fixture(scope="session")
def texts_up_to_9():
    return compositions_up_to(9)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
