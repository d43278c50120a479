from __future__ import annotations

import random
import sys
from itertools import combinations
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from graphdyn.graph import Snapshot


def random_snapshot(rng: random.Random, n: int, p: float = 0.4) -> Snapshot:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Snapshot.from_edges(range(n), edges)


@pytest.fixture
def line5() -> Snapshot:
    return Snapshot.from_edges(range(1, 6), [(1, 2), (2, 3), (3, 4), (4, 5)])


@pytest.fixture
def cycle5(line5: Snapshot) -> Snapshot:
    return line5.with_edges_toggled([(1, 5)])


@pytest.fixture
def chord5(line5: Snapshot) -> Snapshot:
    return line5.with_edges_toggled([(2, 4)])


@pytest.fixture
def path3() -> Snapshot:
    return Snapshot.from_edges([1, 2, 3], [(1, 2), (2, 3)])


@pytest.fixture
def triangle() -> Snapshot:
    return Snapshot.from_edges(range(3), [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def star4() -> Snapshot:
    return Snapshot.from_edges(range(4), [(0, 1), (0, 2), (0, 3)])
