from fractions import Fraction
from types import SimpleNamespace

import pytest

from chordalrig import Framework, Graph, Matrix

F = Fraction


@pytest.fixture(scope="session")
def hexagon():
    """Six points on a hexagon, all pairs adjacent except {1,5}, {1,6}, {2,6}.

    Chordal, 3-connected, general position; carries a frozen indefinite
    stress S of rank 3 whose elimination yields the unit-triangular Gale
    matrix Z and the PSD stress ZZt.
    """
    points = [(-2, 0), (-1, -1), (-1, 1), (1, -1), (1, 1), (2, 0)]
    non_edges = {(1, 5), (1, 6), (2, 6)}
    edges = [(i, j) for i in range(1, 7) for j in range(i + 1, 7)
             if (i, j) not in non_edges]
    fw = Framework(Graph(6, edges), 2, points)
    stress = Matrix([
        [10, -10, -5, 5, 0, 0],
        [-10, 8, 7, -3, -2, 0],
        [-5, 7, 1, -5, 1, 1],
        [5, -3, -5, 1, 3, -1],
        [0, -2, 1, 3, 0, -2],
        [0, 0, 1, -1, -2, 2],
    ])
    gale = Matrix([
        [1, 0, 0],
        [-1, 1, 0],
        [F(-1, 2), -1, 1],
        [F(1, 2), -1, -1],
        [0, 1, -2],
        [0, 0, 2],
    ])
    psd = Matrix([
        [1, -1, F(-1, 2), F(1, 2), 0, 0],
        [-1, 2, F(-1, 2), F(-3, 2), 1, 0],
        [F(-1, 2), F(-1, 2), F(9, 4), F(-1, 4), -3, 2],
        [F(1, 2), F(-3, 2), F(-1, 4), F(9, 4), 1, -2],
        [0, 1, -3, 1, 5, -4],
        [0, 0, 2, -2, -4, 4],
    ])
    eliminated = Matrix([
        [1, -1, F(-1, 2), F(1, 2), 0, 0],
        [0, 1, -1, -1, 1, 0],
        [0, 0, 1, -1, -2, 2],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ])
    return SimpleNamespace(fw=fw, stress=stress, gale=gale, psd=psd,
                           eliminated=eliminated, non_edges=non_edges)


@pytest.fixture(scope="session")
def k5_minus_edge():
    """Five points, three of them collinear: chordal and 3-connected but
    not in general position (witness {1,2,3})."""
    points = [(-60, 0), (-40, 0), (-20, 0), (-40, 10), (-40, -10)]
    edges = [(1, 2), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5),
             (3, 4), (3, 5), (4, 5)]
    return Framework(Graph(5, edges), 2, points)


@pytest.fixture(scope="session")
def prism():
    """Triangular prism in general position: 3-connected but not chordal."""
    points = [(10, 10), (40, 10), (10, -10), (40, -10), (15, 0), (45, 0)]
    edges = [(1, 2), (1, 3), (1, 5), (2, 4), (2, 6),
             (3, 4), (3, 5), (4, 6), (5, 6)]
    return Framework(Graph(6, edges), 2, points)


@pytest.fixture(scope="session")
def k3_line():
    """Complete triangle on the line 0, 1, 2; Gale space spanned by (1,-2,1)."""
    return Framework(Graph.complete(3), 1, [(0,), (1,), (2,)])


@pytest.fixture(scope="session")
def path3_line():
    """Path 1-2-3 on the line 0, 1, 2; connectivity 1, cut vertex 2."""
    return Framework(Graph.path(3), 1, [(0,), (1,), (2,)])
