"""Six node centralities computed as full per-vertex vectors.

All measures share two conventions: values are non-negative, and a vertex
with no edges scores exactly 0. Betweenness counts a vertex as lying on its
own shortest paths, so an endpoint of a connected pair picks up a full unit
for that pair; disconnected pairs contribute nothing. Closeness sums
2^(-hops) over reachable vertices. Pagerank runs over the non-isolated
vertices only, so the teleport mass is not absorbed by vertices that are
forced to zero anyway.

Shortest-path work runs in numba-compiled kernels over CSR adjacency; the
null-model sampling in :mod:`graphdyn.dynamics` evaluates these vectors tens
of thousands of times, which rules out pure-Python traversal.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
from numba import njit

from .graph import Snapshot


class CentralityKind(str, Enum):
    """The closed set of supported centralities."""

    DC = "DC"  # degree
    BC = "BC"  # betweenness
    EC = "EC"  # ego betweenness
    CC = "CC"  # closeness (sum of 2^-distance)
    PC = "PC"  # pagerank
    KC = "KC"  # clustering coefficient

    @classmethod
    def parse(cls, text: str) -> "CentralityKind":
        try:
            return cls(text.strip().upper())
        except ValueError:
            valid = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown centrality {text!r} (expected one of {valid})")


@dataclass(frozen=True)
class PagerankConfig:
    damping: float = 0.85
    tolerance: float = 1e-12  # L1 change per iteration
    max_iterations: int = 1000

    def __post_init__(self) -> None:
        if not 0.0 < self.damping < 1.0:
            raise ValueError("damping must lie strictly between 0 and 1")
        if self.tolerance <= 0.0:
            raise ValueError("tolerance must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be positive")


class PagerankConvergenceError(RuntimeError):
    """Pagerank iteration did not converge within the allowed iterations."""

    def __init__(self, residual: float, iterations: int):
        self.residual = residual
        self.iterations = iterations
        super().__init__(
            f"pagerank did not converge after {iterations} iterations "
            f"(last L1 residual {residual:.3e})"
        )


@dataclass(frozen=True)
class CentralityVector:
    """Per-vertex values of one centrality on one snapshot."""

    kind: CentralityKind
    universe: tuple[int, ...]
    values: np.ndarray  # aligned with universe order

    def __post_init__(self) -> None:
        if len(self.values) != len(self.universe):
            raise ValueError("one value per universe vertex is required")

    def __getitem__(self, vertex: int) -> float:
        return float(self.values[self.universe.index(vertex)])

    def as_dict(self) -> dict[int, float]:
        return {v: float(x) for v, x in zip(self.universe, self.values)}


def _csr(g: Snapshot) -> tuple[np.ndarray, np.ndarray]:
    """Sorted-neighbor CSR arrays (indptr, indices) in universe order."""
    index = {v: i for i, v in enumerate(g.universe)}
    n = g.n
    counts = np.zeros(n + 1, dtype=np.int64)
    pairs = np.empty((2 * len(g.edges), 2), dtype=np.int64)
    for k, (u, v) in enumerate(g.edges):
        i, j = index[u], index[v]
        pairs[2 * k] = (i, j)
        pairs[2 * k + 1] = (j, i)
        counts[i + 1] += 1
        counts[j + 1] += 1
    indptr = np.cumsum(counts)
    indices = np.zeros(len(pairs), dtype=np.int64)
    if len(pairs):
        order = np.lexsort((pairs[:, 1], pairs[:, 0]))
        indices = pairs[order, 1].copy()
    return indptr, indices


@njit(cache=True)
def _bc_cc_kernel(indptr, indices, n):  # pragma: no cover - compiled
    """Brandes accumulation from every source.

    Returns (interior, reach, closeness): interior double-counts every
    unordered pair, reach holds the endpoint units, closeness the sum of
    2^-distance over reachable vertices.
    """
    interior = np.zeros(n)
    reach = np.zeros(n)
    closeness = np.zeros(n)
    dist = np.empty(n, dtype=np.int64)
    sigma = np.empty(n)
    delta = np.empty(n)
    order = np.empty(n, dtype=np.int64)
    for s in range(n):
        for i in range(n):
            dist[i] = -1
            sigma[i] = 0.0
            delta[i] = 0.0
        dist[s] = 0
        sigma[s] = 1.0
        order[0] = s
        head, tail = 0, 1
        while head < tail:
            v = order[head]
            head += 1
            dv = dist[v]
            for t in range(indptr[v], indptr[v + 1]):
                w = indices[t]
                if dist[w] < 0:
                    dist[w] = dv + 1
                    order[tail] = w
                    tail += 1
                if dist[w] == dv + 1:
                    sigma[w] += sigma[v]
        c = 0.0
        for i in range(1, tail):
            c += 2.0 ** (-float(dist[order[i]]))
        closeness[s] = c
        reach[s] += tail - 1
        for i in range(tail - 1, 0, -1):
            w = order[i]
            coeff = (1.0 + delta[w]) / sigma[w]
            dw = dist[w]
            for t in range(indptr[w], indptr[w + 1]):
                v = indices[t]
                if dist[v] == dw - 1:
                    delta[v] += sigma[v] * coeff
            interior[w] += delta[w]
    return interior, reach, closeness


@njit(cache=True)
def _ego_kernel(adj, indptr, indices, n):  # pragma: no cover - compiled
    """Betweenness of each vertex inside its own ego graph.

    The center is adjacent to every other ego-graph vertex, so its score is
    its degree plus, per non-adjacent neighbor pair, one over the number of
    common ego-graph neighbors (the center itself plus shared neighbors that
    also lie in the neighborhood).
    """
    out = np.zeros(n)
    in_ego = np.zeros(n, dtype=np.uint8)
    for v in range(n):
        start, end = indptr[v], indptr[v + 1]
        deg = end - start
        if deg == 0:
            continue
        if deg == 1:
            out[v] = 1.0
            continue
        for idx in range(start, end):
            in_ego[indices[idx]] = 1
        total = float(deg)
        for i in range(start, end):
            x = indices[i]
            for j in range(i + 1, end):
                y = indices[j]
                if adj[x, y]:
                    continue
                shared = 0
                for t in range(indptr[x], indptr[x + 1]):
                    w = indices[t]
                    if in_ego[w] and adj[w, y]:
                        shared += 1
                total += 1.0 / (shared + 1.0)
        out[v] = total
        for idx in range(start, end):
            in_ego[indices[idx]] = 0
    return out


@njit(cache=True)
def _pagerank_kernel(indptr, indices, alpha, tol, maxiter):  # pragma: no cover - compiled
    """Power iteration on a subgraph with no zero-degree vertices."""
    m = len(indptr) - 1
    deg = np.empty(m)
    for i in range(m):
        deg[i] = indptr[i + 1] - indptr[i]
    x = np.full(m, 1.0 / m)
    residual = np.inf
    teleport = (1.0 - alpha) / m
    for _ in range(maxiter):
        contrib = x / deg
        residual = 0.0
        x_next = np.empty(m)
        for i in range(m):
            s = 0.0
            for t in range(indptr[i], indptr[i + 1]):
                s += contrib[indices[t]]
            value = teleport + alpha * s
            residual += abs(value - x[i])
            x_next[i] = value
        x = x_next
        if residual < tol:
            return x, residual, True
    return x, residual, False


def degree_centrality(g: Snapshot) -> CentralityVector:
    indptr, _ = _csr(g)
    return CentralityVector(CentralityKind.DC, g.universe, np.diff(indptr).astype(np.float64))


def betweenness_centrality(g: Snapshot) -> CentralityVector:
    indptr, indices = _csr(g)
    interior, reach, _ = _bc_cc_kernel(indptr, indices, g.n)
    return CentralityVector(CentralityKind.BC, g.universe, interior / 2.0 + reach)


def closeness_centrality(g: Snapshot) -> CentralityVector:
    indptr, indices = _csr(g)
    _, _, closeness = _bc_cc_kernel(indptr, indices, g.n)
    return CentralityVector(CentralityKind.CC, g.universe, closeness)


def ego_centrality(g: Snapshot) -> CentralityVector:
    indptr, indices = _csr(g)
    adj = np.zeros((g.n, g.n), dtype=np.uint8)
    for v in range(g.n):
        adj[v, indices[indptr[v] : indptr[v + 1]]] = 1
    values = _ego_kernel(adj, indptr, indices, g.n)
    return CentralityVector(CentralityKind.EC, g.universe, values)


def pagerank_centrality(g: Snapshot, cfg: PagerankConfig = PagerankConfig()) -> CentralityVector:
    indptr, indices = _csr(g)
    deg = np.diff(indptr)
    active = deg > 0
    values = np.zeros(g.n)
    if not active.any():
        return CentralityVector(CentralityKind.PC, g.universe, values)
    # every neighbor of an active vertex is active, so dropping isolated rows
    # only requires reindexing the CSR columns
    reindex = np.cumsum(active) - 1
    sub_indptr = np.concatenate(([0], np.cumsum(deg[active])))
    sub_indices = reindex[indices]
    x, residual, converged = _pagerank_kernel(
        sub_indptr, sub_indices, cfg.damping, cfg.tolerance, cfg.max_iterations
    )
    if not converged:
        raise PagerankConvergenceError(float(residual), cfg.max_iterations)
    values[active] = x
    return CentralityVector(CentralityKind.PC, g.universe, values)


def cluster_centrality(g: Snapshot) -> CentralityVector:
    a = g.adjacency()
    deg = a.sum(axis=1)
    links_between_neighbors = ((a @ a) * a).sum(axis=1) / 2.0
    values = np.zeros(g.n)
    values[deg == 1] = 1.0
    higher = deg >= 2
    denom = deg * (deg - 1.0)
    values[higher] = 2.0 * links_between_neighbors[higher] / denom[higher]
    return CentralityVector(CentralityKind.KC, g.universe, values)


_DISPATCH = {
    CentralityKind.DC: degree_centrality,
    CentralityKind.BC: betweenness_centrality,
    CentralityKind.EC: ego_centrality,
    CentralityKind.CC: closeness_centrality,
    CentralityKind.KC: cluster_centrality,
}


def centrality(
    kind: CentralityKind, g: Snapshot, cfg: PagerankConfig = PagerankConfig()
) -> CentralityVector:
    """Compute any of the six centralities; cfg is used only for pagerank."""
    if kind is CentralityKind.PC:
        return pagerank_centrality(g, cfg)
    return _DISPATCH[kind](g)
