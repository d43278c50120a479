"""Labeled undirected graphs, vertex universes, and snapshot traces.

Vertices carry integer identifiers that are stable over time: two snapshots
agree on who vertex 7 is, so their per-vertex measurements can be compared
index by index. Snapshots are immutable value objects and safe to share
between workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

Edge = tuple[int, int]


class UnknownVertexError(ValueError):
    """A vertex identifier is not part of the snapshot's universe."""


def canonical_edge(u: int, v: int) -> Edge:
    """Return the unordered pair (u, v) with the smaller identifier first."""
    if u == v:
        raise ValueError(f"self-loop on vertex {u} is not allowed")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Snapshot:
    """One labeled undirected graph: an ordered vertex universe plus edges.

    Edges are stored canonically (smaller id first) in a frozenset; the
    universe is a sorted tuple of distinct non-negative identifiers.
    """

    universe: tuple[int, ...]
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        members = set(self.universe)
        if len(members) != len(self.universe):
            raise ValueError("universe contains duplicate vertex identifiers")
        if any(v < 0 for v in self.universe):
            raise ValueError("vertex identifiers must be non-negative")
        if tuple(sorted(self.universe)) != self.universe:
            object.__setattr__(self, "universe", tuple(sorted(self.universe)))
        for u, v in self.edges:
            if u >= v:
                raise ValueError(f"edge ({u}, {v}) is not in canonical order")
            if u not in members or v not in members:
                raise UnknownVertexError(
                    f"edge ({u}, {v}) has an endpoint outside the universe"
                )

    @classmethod
    def from_edges(
        cls, universe: Iterable[int], edges: Iterable[tuple[int, int]] = ()
    ) -> "Snapshot":
        """Build a snapshot, canonicalizing edge order and deduplicating."""
        return cls(
            universe=tuple(sorted(set(universe))),
            edges=frozenset(canonical_edge(u, v) for u, v in edges),
        )

    @property
    def n(self) -> int:
        return len(self.universe)

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edges

    def neighbors(self, v: int) -> set[int]:
        """Return the set of vertices adjacent to v."""
        if v not in set(self.universe):
            raise UnknownVertexError(f"vertex {v} is not in the universe")
        out: set[int] = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def with_edges_toggled(self, pairs: Iterable[tuple[int, int]]) -> "Snapshot":
        """Return a copy with each given pair flipped (added if absent, else removed)."""
        edges = set(self.edges)
        for u, v in pairs:
            e = canonical_edge(u, v)
            if e in edges:
                edges.remove(e)
            else:
                edges.add(e)
        return Snapshot(universe=self.universe, edges=frozenset(edges))

    def adjacency(self) -> np.ndarray:
        """Dense symmetric 0/1 adjacency matrix in universe order."""
        index = {v: i for i, v in enumerate(self.universe)}
        a = np.zeros((self.n, self.n), dtype=np.float64)
        for u, v in self.edges:
            i, j = index[u], index[v]
            a[i, j] = 1.0
            a[j, i] = 1.0
        return a


def neighbors(g: Snapshot, v: int) -> set[int]:
    """Functional alias for :meth:`Snapshot.neighbors`."""
    return g.neighbors(v)


@dataclass(frozen=True)
class Trace:
    """An ordered sequence of snapshots sharing one vertex universe."""

    snapshots: tuple[Snapshot, ...]
    timestamps: tuple[float, ...] | None = field(default=None)

    def __post_init__(self) -> None:
        if not self.snapshots:
            raise ValueError("a trace needs at least one snapshot")
        universe = self.snapshots[0].universe
        for i, snap in enumerate(self.snapshots):
            if snap.universe != universe:
                raise ValueError(f"snapshot {i} does not share the trace universe")
        if self.timestamps is not None:
            if len(self.timestamps) != len(self.snapshots):
                raise ValueError("one timestamp per snapshot is required")
            if any(b <= a for a, b in zip(self.timestamps, self.timestamps[1:])):
                raise ValueError("timestamps must be strictly increasing")

    def __len__(self) -> int:
        return len(self.snapshots)

    def __getitem__(self, i: int) -> Snapshot:
        return self.snapshots[i]

    @property
    def universe(self) -> tuple[int, ...]:
        return self.snapshots[0].universe


def align_universe(
    snapshots: Sequence[Snapshot], timestamps: Sequence[float] | None = None
) -> Trace:
    """Lift every snapshot onto the union of all universes.

    Vertices absent from an individual snapshot become isolated there, which
    leaves their centrality at zero by convention.
    """
    if not snapshots:
        raise ValueError("cannot align an empty snapshot list")
    union: set[int] = set()
    for snap in snapshots:
        union.update(snap.universe)
    universe = tuple(sorted(union))
    aligned = tuple(
        snap if snap.universe == universe else Snapshot(universe=universe, edges=snap.edges)
        for snap in snapshots
    )
    return Trace(
        snapshots=aligned,
        timestamps=tuple(timestamps) if timestamps is not None else None,
    )
