"""Reading temporal edge lists and exporting analysis results.

The canonical input is plain text, one interaction per line:

    timestamp u v

with whitespace separation and ``#`` comment lines. Records are binned into
snapshots either by fixed time window or cumulatively (snapshot t holds all
edges seen up to the t-th distinct timestamp). Exports are CSV (the golden,
bit-exact format) or JSON (for tooling); floats are written with nine digits
after the decimal point.
"""

from __future__ import annotations

import json
import statistics
from dataclasses import dataclass
from enum import Enum
from typing import IO, Iterable, Sequence

from .centrality import CentralityKind
from .dynamics import DynamicSignature, TransitionAnalysis
from .graph import Snapshot, Trace, align_universe, canonical_edge

NULL_MODEL_REFERENCE_P = 0.05  # expected outlier fraction under the null model


class TraceParseError(ValueError):
    """Malformed temporal edge list input."""


class BinningMode(str, Enum):
    WINDOW = "window"
    CUMULATIVE = "cumulative"


@dataclass(frozen=True)
class BinningPolicy:
    mode: BinningMode
    window: int = 0  # WINDOW only

    def __post_init__(self) -> None:
        if self.mode is BinningMode.WINDOW and self.window <= 0:
            raise ValueError("window width must be positive")


def _parse_records(lines: Iterable[str]) -> list[tuple[int, int, int]]:
    records = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise TraceParseError(
                f"line {lineno}: expected 'timestamp u v', got {line!r}"
            )
        try:
            ts, u, v = (int(p) for p in parts)
        except ValueError:
            raise TraceParseError(f"line {lineno}: non-integer field in {line!r}")
        if ts < 0:
            raise TraceParseError(f"line {lineno}: negative timestamp {ts}")
        if u == v:
            raise TraceParseError(f"line {lineno}: self-loop on vertex {u}")
        records.append((ts, u, v))
    if not records:
        raise TraceParseError("no edge records in input")
    return records


def parse_temporal_edge_list(source: IO[str] | Iterable[str], policy: BinningPolicy) -> Trace:
    """Bin a temporal edge list into an aligned snapshot trace."""
    records = _parse_records(source)
    universe = sorted({u for _, u, _ in records} | {v for _, _, v in records})
    snapshots: list[Snapshot] = []
    timestamps: list[float] = []
    if policy.mode is BinningMode.WINDOW:
        w = policy.window
        last_bin = max(ts for ts, _, _ in records) // w
        bins: dict[int, set[tuple[int, int]]] = {b: set() for b in range(last_bin + 1)}
        for ts, u, v in records:
            bins[ts // w].add(canonical_edge(u, v))
        for b in range(last_bin + 1):
            snapshots.append(Snapshot.from_edges(universe, bins[b]))
            timestamps.append(float(b * w))
    else:
        boundaries = sorted({ts for ts, _, _ in records})
        edges: set[tuple[int, int]] = set()
        i = 0
        ordered = sorted(records)
        for boundary in boundaries:
            while i < len(ordered) and ordered[i][0] <= boundary:
                edges.add(canonical_edge(ordered[i][1], ordered[i][2]))
                i += 1
            snapshots.append(Snapshot.from_edges(universe, edges))
            timestamps.append(float(boundary))
    return align_universe(snapshots, timestamps)


def write_trace_edge_list(trace: Trace, sink: IO[str]) -> None:
    """Write a monotone trace as `t u v` lines, one per first edge appearance.

    Snapshot index serves as the timestamp, so reading the file back with the
    cumulative policy reconstructs every snapshot that introduced an edge.
    """
    seen: set[tuple[int, int]] = set(trace[0].edges)
    for u, v in sorted(seen):
        sink.write(f"0 {u} {v}\n")
    for t in range(1, len(trace)):
        new = trace[t].edges - seen
        missing = seen - trace[t].edges
        if missing:
            raise ValueError("trace is not monotone; edge-list export would lose edges")
        for u, v in sorted(new):
            sink.write(f"{t} {u} {v}\n")
        seen |= new


def _fmt(x: float) -> str:
    return f"{x:.9f}"


CHRONOGRAM_HEADER = (
    "t,radius,measured,sample_median,sample_mean,sample_sd,lower2s,upper2s,outlier"
)


def _chronogram_rows(analyses: Sequence[TransitionAnalysis]) -> list[dict]:
    if not analyses:
        raise ValueError("no transition analyses to export")
    kinds = {a.centrality for a in analyses}
    if len(kinds) != 1:
        raise ValueError("chronogram export requires a single centrality kind")
    rows = []
    for a in analyses:
        rows.append(
            {
                "t": a.index,
                "radius": a.radius,
                "measured": a.measured,
                "sample_median": statistics.median(a.sample_distances),
                "sample_mean": a.mean,
                "sample_sd": a.std_dev,
                "lower2s": a.mean - 2.0 * a.std_dev,
                "upper2s": a.mean + 2.0 * a.std_dev,
                "outlier": a.outlier,
            }
        )
    return rows


def export_chronogram(
    analyses: Sequence[TransitionAnalysis], sink: IO[str], format: str = "csv"
) -> None:
    """Write per-transition analyses in plot-ready CSV or JSON form."""
    rows = _chronogram_rows(analyses)
    if format == "csv":
        sink.write(CHRONOGRAM_HEADER + "\n")
        for r in rows:
            sink.write(
                f"{r['t']},{r['radius']},{_fmt(r['measured'])},"
                f"{_fmt(r['sample_median'])},{_fmt(r['sample_mean'])},"
                f"{_fmt(r['sample_sd'])},{_fmt(r['lower2s'])},{_fmt(r['upper2s'])},"
                f"{'true' if r['outlier'] else 'false'}\n"
            )
    elif format == "json":
        payload = {
            "centrality": analyses[0].centrality.value,
            "transitions": [
                {
                    key: (round(val, 9) if isinstance(val, float) else val)
                    for key, val in r.items()
                }
                for r in rows
            ],
        }
        json.dump(payload, sink, indent=2)
        sink.write("\n")
    else:
        raise ValueError(f"unknown export format {format!r}")


SIGNATURE_HEADER = "trace,centrality,p,transitions"


def export_signature(sig: DynamicSignature, sink: IO[str], format: str = "csv") -> None:
    """Write a dynamic signature as one row per centrality."""
    ordered = [k for k in CentralityKind if k in sig.p]
    if format == "csv":
        sink.write(SIGNATURE_HEADER + "\n")
        for kind in ordered:
            sink.write(
                f"{sig.trace_name},{kind.value},{_fmt(sig.p[kind])},"
                f"{sig.transitions_considered}\n"
            )
    elif format == "json":
        payload = {
            "trace": sig.trace_name,
            "transitions": sig.transitions_considered,
            "null_model_reference_p": NULL_MODEL_REFERENCE_P,
            "p": {kind.value: round(sig.p[kind], 9) for kind in ordered},
        }
        json.dump(payload, sink, indent=2)
        sink.write("\n")
    else:
        raise ValueError(f"unknown export format {format!r}")
