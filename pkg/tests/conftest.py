import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from planar_support.plane_graph import PlaneGraph  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: takes more than a few seconds")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def triangle():
    return PlaneGraph({1: [2, 3], 2: [3, 1], 3: [1, 2]}, (1, 2))


@pytest.fixture
def k4():
    # outer triangle 1 2 3 with 4 inside; clockwise rotations
    rot = {1: [2, 4, 3], 2: [3, 4, 1], 3: [1, 4, 2], 4: [1, 2, 3]}
    G = PlaneGraph(rot)
    for i in range(len(G.face_darts)):
        if set(G.face_vertices(i)) == {1, 2, 3}:
            return G.with_outer_face(i)
    raise AssertionError("no outer triangle")
