import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from planecount.graph import Graph, complete, cube, prism  # noqa: E402
from planecount.plane import RotationSystem  # noqa: E402

from oracles import convex_rotation  # noqa: E402

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

CUBE_POINTS = [((v >> 0) & 1, (v >> 1) & 1, (v >> 2) & 1) for v in range(8)]
PRISM_POINTS = [(1, 0, 0), (-0.5, 0.866, 0), (-0.5, -0.866, 0), (1, 0, 1), (-0.5, 0.866, 1), (-0.5, -0.866, 1)]
K4_POINTS = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]


@pytest.fixture
def cube_rotation():
    return RotationSystem.from_lists(convex_rotation(CUBE_POINTS, cube().edges))


@pytest.fixture
def prism_rotation():
    return RotationSystem.from_lists(convex_rotation(PRISM_POINTS, prism().edges))


@pytest.fixture
def k4_rotation():
    return RotationSystem.from_lists(convex_rotation(K4_POINTS, complete(4).edges))


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = Graph(n, tuple(chosen))
    if connected and not g.is_connected():
        # join components along a path
        comps = g.components()
        extra = tuple((comps[i][0], comps[i + 1][0]) for i in range(len(comps) - 1))
        g = Graph(n, g.edges + extra)
    return g


@st.composite
def rotations(draw, min_n=1, max_n=8, connected=False):
    g = draw(graphs(min_n=min_n, max_n=max_n, connected=connected))
    order = tuple(tuple(draw(st.permutations(sorted(nb)))) for nb in g.adj)
    return RotationSystem(order)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance():
    def record(criterion: str, ok: bool, detail: str) -> None:
        ACCEPTANCE_LINES.append(f"{criterion} {'PASS' if ok else 'FAIL'}: {detail}")
        print(ACCEPTANCE_LINES[-1])
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
