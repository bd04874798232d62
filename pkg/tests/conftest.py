import math

import pytest

from cbclab.graph import BackbonePair, Graph, attach_backbone, build_graph
from cbclab.planar import RotationSystem


def cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def pair(g: Graph, backbone=()) -> BackbonePair:
    return attach_backbone(g, backbone)


def rotation_from_coords(g: Graph, coords) -> RotationSystem:
    """Counter-clockwise neighbour order of a straight-line drawing."""
    rots = []
    for u in range(g.n):
        x0, y0 = coords[u]
        nb = sorted(g.adj[u], key=lambda v: math.atan2(coords[v][1] - y0, coords[v][0] - x0))
        rots.append(tuple(nb))
    return RotationSystem(g.n, tuple(rots))


BOWTIE = build_graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])
BOWTIE_COORDS = [(0, 0), (-2, 1), (-2, -1), (2, 1), (2, -1)]

# 4-cycle 0-1-2-3 with a triangle glued outside each side
SQUARE_TRI = build_graph(8, [
    (0, 1), (1, 2), (2, 3), (0, 3),
    (0, 4), (1, 4), (1, 5), (2, 5), (2, 6), (3, 6), (3, 7), (0, 7),
])
SQUARE_TRI_COORDS = [(-1, 1), (1, 1), (1, -1), (-1, -1), (0, 3), (3, 0), (0, -3), (-3, 0)]

# hub 0, rim 1-2-3-4
W4 = build_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (1, 4)])
W4_COORDS = [(0, 0), (1, 0), (0, 1), (-1, 0), (0, -1)]

Q3 = build_graph(8, [
    (0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7),
    (0, 4), (1, 5), (2, 6), (3, 7),
])
Q3_COORDS = [(-2, 2), (2, 2), (2, -2), (-2, -2), (-1, 1), (1, 1), (1, -1), (-1, -1)]

PETERSEN = build_graph(10, [
    (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
    (5, 7), (7, 9), (6, 9), (6, 8), (5, 8),
])

PAW = build_graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


@pytest.fixture
def bowtie_rs():
    return rotation_from_coords(BOWTIE, BOWTIE_COORDS)


@pytest.fixture
def square_tri_rs():
    return rotation_from_coords(SQUARE_TRI, SQUARE_TRI_COORDS)


@pytest.fixture
def w4_rs():
    return rotation_from_coords(W4, W4_COORDS)


@pytest.fixture
def q3_rs():
    return rotation_from_coords(Q3, Q3_COORDS)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
