"""Null-model comparison of observed graph transitions.

For each consecutive snapshot pair the graph edit distance R between them is
taken as a sampling radius, k random graphs at exactly that radius from the
earlier snapshot are drawn, and the observed centrality distance is flagged
as an outlier when it deviates from the sample mean by more than twice the
population standard deviation. The fraction of outlier transitions per
centrality over a whole trace forms its dynamic signature.

Randomness is organized as independent substreams derived from a master seed
plus (transition index, sample index, centrality kind), so per-transition and
per-sample work may be scheduled in any order, or concurrently, without
changing the result.
"""

from __future__ import annotations

import random
import statistics
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .centrality import CentralityKind, PagerankConfig, centrality
from .graph import Snapshot, Trace
from .metrics import UniverseMismatchError, ged


class NullModelKind(str, Enum):
    UNIFORM = "uniform"  # toggle R uniformly random distinct pairs
    DEGREE_PRESERVING = "degree"  # additionally match the successor's edge count


@dataclass(frozen=True)
class SamplerConfig:
    k: int = 100
    seed: int = 0
    null_model: NullModelKind = NullModelKind.UNIFORM

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError("k must be at least 2 (standard deviation needs it)")


@dataclass(frozen=True)
class TransitionAnalysis:
    """Everything measured about one transition for one centrality."""

    index: int
    radius: int
    measured: float
    sample_distances: tuple[float, ...]
    mean: float
    std_dev: float
    outlier: bool
    centrality: CentralityKind


@dataclass(frozen=True)
class DynamicSignature:
    """Outlier fraction per centrality over one trace."""

    p: dict[CentralityKind, float]
    transitions_considered: int
    trace_name: str = ""

    def __post_init__(self) -> None:
        for kind, value in self.p.items():
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"p for {kind.value} outside [0, 1]: {value}")


def _unrank_pair(index: int, n: int) -> tuple[int, int]:
    """Map a linear index to the index-th unordered pair (i, j), i < j < n."""
    row = 0
    remaining = index
    row_size = n - 1
    while remaining >= row_size:
        remaining -= row_size
        row += 1
        row_size -= 1
    return row, row + 1 + remaining


def substream(seed: int, transition: int, sample: int, kind: CentralityKind) -> random.Random:
    """Deterministic independent RNG for one (transition, sample, kind) cell."""
    return random.Random(f"{seed}/{transition}/{sample}/{kind.value}")


def sample_uniform(g: Snapshot, radius: int, rng: random.Random) -> Snapshot:
    """Toggle exactly `radius` distinct vertex pairs chosen uniformly.

    Distinctness guarantees the result sits at graph edit distance exactly
    `radius` from g.
    """
    n = g.n
    total_pairs = n * (n - 1) // 2
    if not 0 <= radius <= total_pairs:
        raise ValueError(f"radius {radius} outside [0, {total_pairs}] for {n} vertices")
    indices = rng.sample(range(total_pairs), radius)
    pairs = []
    for idx in indices:
        i, j = _unrank_pair(idx, n)
        pairs.append((g.universe[i], g.universe[j]))
    return g.with_edges_toggled(pairs)


def sample_degree_preserving(g_t: Snapshot, g_next: Snapshot, rng: random.Random) -> Snapshot:
    """Random graph at radius ged(g_t, g_next) from g_t with g_next's edge count.

    With R the radius and D the edge-count difference, adding (R+D)/2 absent
    pairs and removing (R-D)/2 present edges is the unique split meeting both
    constraints; the pairs themselves are chosen uniformly without replacement.
    """
    radius = ged(g_t, g_next)
    delta = len(g_next.edges) - len(g_t.edges)
    additions = (radius + delta) // 2
    removals = (radius - delta) // 2
    n = g_t.n
    universe = g_t.universe
    all_pairs = [
        (universe[i], universe[j]) for i in range(n) for j in range(i + 1, n)
    ]
    absent = [p for p in all_pairs if p not in g_t.edges]
    present = sorted(g_t.edges)
    if additions > len(absent):
        raise ValueError(f"need {additions} absent pairs but only {len(absent)} exist")
    if removals > len(present):
        raise ValueError(f"need {removals} edges to remove but only {len(present)} exist")
    toggles = rng.sample(absent, additions) + rng.sample(present, removals)
    return g_t.with_edges_toggled(toggles)


def is_outlier(measured: float, sample_distances: Sequence[float]) -> bool:
    """Two-sigma rule with population standard deviation and strict inequality."""
    if len(sample_distances) < 2:
        raise ValueError("at least 2 sample distances are required")
    mu = statistics.fmean(sample_distances)
    sigma = statistics.pstdev(sample_distances)
    return abs(measured - mu) > 2.0 * sigma


def analyze_transition(
    g_t: Snapshot,
    g_next: Snapshot,
    kind: CentralityKind,
    cfg: SamplerConfig = SamplerConfig(),
    pcfg: PagerankConfig = PagerankConfig(),
    transition_index: int = 0,
) -> TransitionAnalysis:
    """Compare one observed transition against k null-model draws."""
    if g_t.universe != g_next.universe:
        raise UniverseMismatchError("transition endpoints must share a universe")
    radius = ged(g_t, g_next)
    if radius < 1:
        raise ValueError("transition has radius 0; the null model is degenerate")
    base = centrality(kind, g_t, pcfg).values
    measured = float(abs(centrality(kind, g_next, pcfg).values - base).sum())
    distances = []
    for i in range(cfg.k):
        rng = substream(cfg.seed, transition_index, i, kind)
        if cfg.null_model is NullModelKind.UNIFORM:
            sample = sample_uniform(g_t, radius, rng)
        else:
            sample = sample_degree_preserving(g_t, g_next, rng)
        distances.append(float(abs(centrality(kind, sample, pcfg).values - base).sum()))
    mu = statistics.fmean(distances)
    sigma = statistics.pstdev(distances)
    return TransitionAnalysis(
        index=transition_index,
        radius=radius,
        measured=measured,
        sample_distances=tuple(distances),
        mean=mu,
        std_dev=sigma,
        outlier=abs(measured - mu) > 2.0 * sigma,
        centrality=kind,
    )


def chronogram(
    trace: Trace,
    kind: CentralityKind,
    cfg: SamplerConfig = SamplerConfig(),
    pcfg: PagerankConfig = PagerankConfig(),
) -> list[TransitionAnalysis]:
    """Analyze every transition of the trace for one centrality.

    Transitions at radius 0 are skipped; the returned indices identify the
    transitions that were analyzed.
    """
    if len(trace) < 2:
        raise ValueError("a trace of length >= 2 is required")
    out = []
    for t in range(len(trace) - 1):
        if ged(trace[t], trace[t + 1]) == 0:
            continue
        out.append(
            analyze_transition(trace[t], trace[t + 1], kind, cfg, pcfg, transition_index=t)
        )
    return out


def signature(
    trace: Trace,
    kinds: Sequence[CentralityKind] = tuple(CentralityKind),
    cfg: SamplerConfig = SamplerConfig(),
    pcfg: PagerankConfig = PagerankConfig(),
    trace_name: str = "",
) -> DynamicSignature:
    """Outlier fraction per centrality over the trace's non-trivial transitions."""
    if len(trace) < 2:
        raise ValueError("a trace of length >= 2 is required")
    considered = [
        t for t in range(len(trace) - 1) if ged(trace[t], trace[t + 1]) >= 1
    ]
    if not considered:
        raise ValueError("every transition has radius 0; nothing to analyze")
    p: dict[CentralityKind, float] = {}
    for kind in kinds:
        outliers = 0
        for t in considered:
            analysis = analyze_transition(
                trace[t], trace[t + 1], kind, cfg, pcfg, transition_index=t
            )
            if analysis.outlier:
                outliers += 1
        p[kind] = outliers / len(considered)
    return DynamicSignature(
        p=p, transitions_considered=len(considered), trace_name=trace_name
    )
