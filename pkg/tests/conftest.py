from __future__ import annotations

import pytest

from wdlab import Orientation

# The three worked orientations on four vertices used throughout: D1 is the
# acyclic one whose sector digraph still has an odd Eulerian subdigraph,
# D2 contains directed triangles, D3 orients a 4-cycle.


@pytest.fixture(scope="session")
def d1() -> Orientation:
    return Orientation(4, frozenset([(1, 2), (1, 3), (2, 4), (3, 2)]))


@pytest.fixture(scope="session")
def d2() -> Orientation:
    return Orientation(4, frozenset([(2, 1), (4, 1), (1, 3), (3, 4), (3, 2)]))


@pytest.fixture(scope="session")
def d3() -> Orientation:
    return Orientation(4, frozenset([(2, 1), (3, 2), (3, 4), (4, 1)]))
