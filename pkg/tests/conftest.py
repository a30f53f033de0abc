import sys
from pathlib import Path

import hypothesis.strategies as st
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from fintopo.relation import Relation
from fintopo.topology import topologies

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@st.composite
def spaces(draw, min_n=1, max_n=4):
    n = draw(st.integers(min_n, max_n))
    return draw(st.sampled_from(topologies(n)))


@st.composite
def space_relations(draw, min_n=1, max_n=4):
    space = draw(spaces(min_n, max_n))
    code = draw(st.integers(0, (1 << space.n * space.n) - 1))
    return space, Relation.from_code(space.n, code)


@st.composite
def relations(draw, min_n=1, max_n=4):
    n = draw(st.integers(min_n, max_n))
    return Relation.from_code(n, draw(st.integers(0, (1 << n * n) - 1)))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
