"""Distances between two snapshots on a shared universe.

Graph edit distance here is the labeled-graph special case: universes are
aligned beforehand, so the minimum number of link insertions/removals is
exactly the size of the symmetric difference of the edge sets. Centrality
distance is the L1 distance between two per-vertex centrality vectors,
compared identifier by identifier (never via graph matching).
"""

from __future__ import annotations

import numpy as np

from .centrality import CentralityKind, PagerankConfig, centrality
from .graph import Snapshot


class UniverseMismatchError(ValueError):
    """The two snapshots do not share a vertex universe; align them first."""


def _require_shared_universe(g1: Snapshot, g2: Snapshot) -> None:
    if g1.universe != g2.universe:
        raise UniverseMismatchError(
            "snapshots live on different universes; run align_universe first"
        )


def ged(g1: Snapshot, g2: Snapshot) -> int:
    """Minimum number of single-edge insertions/removals turning g1 into g2."""
    _require_shared_universe(g1, g2)
    return len(g1.edges ^ g2.edges)


def centrality_distance(
    kind: CentralityKind,
    g1: Snapshot,
    g2: Snapshot,
    cfg: PagerankConfig = PagerankConfig(),
) -> float:
    """L1 distance between the two snapshots' centrality vectors."""
    _require_shared_universe(g1, g2)
    c1 = centrality(kind, g1, cfg)
    c2 = centrality(kind, g2, cfg)
    return float(np.abs(c1.values - c2.values).sum())
