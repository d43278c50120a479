"""Synthetic dynamic traces: one snapshot per edge event.

Each model only ever adds edges, one per step, so consecutive snapshots sit
at graph edit distance exactly 1 and edge sets are nested along the trace.
A new-vertex arrival that brings several edges (BA with m > 1) therefore
spans several snapshots.

Models:
  ER      incremental Erdos-Renyi: uniformly random absent edge per step
  RR      random d-regular built by uniform admissible pairings, with
          restarts on dead ends
  BA      Barabasi-Albert preferential attachment, m edges per arrival
  CMHALF  preferential attachment with node and edge events equally likely
  CMLOG   like CMHALF but node events occur with probability 1/log2(t+2)
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

from .graph import Snapshot, Trace, align_universe, canonical_edge

Edge = tuple[int, int]


class GeneratorModel(str, Enum):
    ER = "er"
    RR = "rr"
    BA = "ba"
    CMHALF = "cmhalf"
    CMLOG = "cmlog"


@dataclass(frozen=True)
class GeneratorConfig:
    model: GeneratorModel
    n: int
    steps: int | None = None  # edge events; None derives a model default
    d: int = 3  # RR only
    m: int = 1  # BA only
    seed: int = 0
    restart_budget: int = 100  # RR only
    # CMLOG schedule: probability of a node event at event number t
    node_event_schedule: Callable[[int], float] | None = None

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.model is GeneratorModel.RR:
            if self.n * self.d % 2 != 0:
                raise ValueError("random regular requires n*d even")
            if not 0 < self.d < self.n:
                raise ValueError("random regular requires 0 < d < n")
        if self.model is GeneratorModel.BA and self.m < 1:
            raise ValueError("BA requires m >= 1")
        if self.steps is not None and self.steps < 1:
            raise ValueError("steps must be at least 1")

    def resolved_steps(self) -> int:
        if self.steps is not None:
            return self.steps
        if self.model is GeneratorModel.RR:
            return self.n * self.d // 2
        if self.model is GeneratorModel.BA:
            return (self.n - 2) * self.m + 1 if self.n > 2 else 1
        raise ValueError(f"steps must be given explicitly for model {self.model.value}")


def preferential_pick(
    vertices: Sequence[int], degrees: dict[int, int], rng: random.Random
) -> int:
    """Pick a vertex with probability proportional to its degree.

    Falls back to a uniform pick while total degree is zero (bootstrap).
    """
    weights = [degrees[v] for v in vertices]
    if sum(weights) == 0:
        return vertices[rng.randrange(len(vertices))]
    return rng.choices(vertices, weights=weights, k=1)[0]


def _er_events(cfg: GeneratorConfig, rng: random.Random) -> tuple[list[int], list[Edge]]:
    n = cfg.n
    steps = cfg.resolved_steps()
    total_pairs = n * (n - 1) // 2
    if steps > total_pairs:
        raise ValueError(f"ER on {n} vertices supports at most {total_pairs} steps")
    edges: set[Edge] = set()
    events: list[Edge] = []
    for _ in range(steps):
        # rejection sampling; switch to enumeration when the graph gets dense
        edge = None
        for _attempt in range(200):
            u = rng.randrange(n)
            v = rng.randrange(n)
            if u == v:
                continue
            e = canonical_edge(u, v)
            if e not in edges:
                edge = e
                break
        if edge is None:
            absent = [
                (i, j)
                for i in range(n)
                for j in range(i + 1, n)
                if (i, j) not in edges
            ]
            edge = absent[rng.randrange(len(absent))]
        edges.add(edge)
        events.append(edge)
    return list(range(n)), events


def _rr_events(cfg: GeneratorConfig, rng: random.Random) -> tuple[list[int], list[Edge]]:
    n, d = cfg.n, cfg.d
    steps = cfg.resolved_steps()
    target_edges = n * d // 2
    if steps > target_edges:
        raise ValueError(f"random regular on n={n}, d={d} has only {target_edges} steps")
    for _restart in range(cfg.restart_budget):
        residual = {v: d for v in range(n)}
        edges: set[Edge] = set()
        events: list[Edge] = []
        while len(edges) < target_edges:
            open_vertices = [v for v in range(n) if residual[v] > 0]
            eligible = [
                (u, v)
                for i, u in enumerate(open_vertices)
                for v in open_vertices[i + 1 :]
                if (u, v) not in edges
            ]
            if not eligible:
                break  # dead end; restart from scratch on the same stream
            edge = eligible[rng.randrange(len(eligible))]
            edges.add(edge)
            events.append(edge)
            residual[edge[0]] -= 1
            residual[edge[1]] -= 1
        if len(edges) == target_edges:
            return list(range(n)), events[:steps]
    raise RuntimeError(
        f"random regular construction failed {cfg.restart_budget} times for n={n}, d={d}"
    )


def _ba_events(cfg: GeneratorConfig, rng: random.Random) -> tuple[list[int], list[Edge]]:
    steps = cfg.resolved_steps()
    max_events = 1 + (cfg.n - 2) * cfg.m
    if steps > max_events:
        raise ValueError(f"BA with n={cfg.n}, m={cfg.m} supports at most {max_events} steps")
    degrees = {0: 1, 1: 1}
    edges: set[Edge] = {(0, 1)}
    events: list[Edge] = [(0, 1)]
    new_vertex = 2
    while len(events) < steps and new_vertex < cfg.n:
        existing = list(range(new_vertex))
        degrees[new_vertex] = 0
        attached: set[int] = set()
        wanted = min(cfg.m, len(existing), steps - len(events))
        while len(attached) < wanted:
            target = preferential_pick(existing, degrees, rng)
            if target in attached:
                continue
            attached.add(target)
            edge = canonical_edge(new_vertex, target)
            edges.add(edge)
            events.append(edge)
            degrees[new_vertex] += 1
            degrees[target] += 1
        new_vertex += 1
    return list(range(new_vertex)), events


def _cm_events(
    cfg: GeneratorConfig, rng: random.Random, node_probability: Callable[[int], float]
) -> tuple[list[int], list[Edge]]:
    steps = cfg.resolved_steps()
    degrees = {0: 1, 1: 1}
    edges: set[Edge] = {(0, 1)}
    events: list[Edge] = []
    vertex_count = 2
    for t in range(steps):
        existing = list(range(vertex_count))
        complete = len(edges) == vertex_count * (vertex_count - 1) // 2
        node_event = (rng.random() < node_probability(t) and vertex_count < cfg.n) or (
            complete and vertex_count < cfg.n
        )
        if node_event:
            target = preferential_pick(existing, degrees, rng)
            new_vertex = vertex_count
            vertex_count += 1
            degrees[new_vertex] = 1
            degrees[target] += 1
            edge = canonical_edge(new_vertex, target)
        else:
            if complete:
                raise ValueError(
                    f"graph saturated after {t} events; raise n or lower steps"
                )
            edge = None
            while edge is None:
                a = preferential_pick(existing, degrees, rng)
                b = preferential_pick(existing, degrees, rng)
                if a == b:
                    continue
                candidate = canonical_edge(a, b)
                if candidate not in edges:
                    edge = candidate
            degrees[edge[0]] += 1
            degrees[edge[1]] += 1
        edges.add(edge)
        events.append(edge)
    return list(range(vertex_count)), events


def _log_decay_schedule(t: int) -> float:
    return 1.0 / math.log2(t + 2)


def generate(cfg: GeneratorConfig) -> Trace:
    """Generate an aligned trace whose consecutive snapshots differ by one edge."""
    rng = random.Random(cfg.seed)
    if cfg.model is GeneratorModel.ER:
        vertices, events = _er_events(cfg, rng)
        initial: set[Edge] = set()
    elif cfg.model is GeneratorModel.RR:
        vertices, events = _rr_events(cfg, rng)
        initial = set()
    elif cfg.model is GeneratorModel.BA:
        vertices, events = _ba_events(cfg, rng)
        initial = set()
        events = list(events)
        # snapshot 0 is the seed edge; remaining events evolve from it
        initial = {events[0]}
        events = events[1:]
    elif cfg.model is GeneratorModel.CMHALF:
        vertices, events = _cm_events(cfg, rng, lambda t: 0.5)
        initial = {(0, 1)}
    else:
        schedule = cfg.node_event_schedule or _log_decay_schedule
        vertices, events = _cm_events(cfg, rng, schedule)
        initial = {(0, 1)}

    snapshots = []
    edges = set(initial)
    snapshots.append(Snapshot.from_edges(vertices, edges))
    for edge in events:
        edges.add(edge)
        snapshots.append(Snapshot.from_edges(vertices, edges))
    return align_universe(snapshots)
