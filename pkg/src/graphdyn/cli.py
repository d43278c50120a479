"""Command-line interface tying ingestion, generation, analysis, and export together.

Every subcommand is a thin composition of library calls; all numeric behavior
lives in (and is tested through) the library modules. Exit codes: 0 success,
1 usage error, 2 data or convergence error.
"""

from __future__ import annotations

import secrets
import sys
from pathlib import Path
from typing import IO, Sequence

import click

from . import dynamics, generators, traceio
from .centrality import (
    CentralityKind,
    PagerankConfig,
    PagerankConvergenceError,
    centrality,
)
from .dynamics import NullModelKind, SamplerConfig
from .graph import Snapshot, Trace, align_universe
from .metrics import centrality_distance, ged
from .traceio import BinningMode, BinningPolicy, TraceParseError


def _read_snapshot(path: str) -> Snapshot:
    """Read an edge list file as a single snapshot (all timestamps collapsed)."""
    with open(path) as fh:
        records = traceio._parse_records(fh)
    universe = sorted({u for _, u, _ in records} | {v for _, _, v in records})
    return Snapshot.from_edges(universe, [(u, v) for _, u, v in records])


def _read_trace(path: str, bin_window: int | None, cumulative: bool) -> Trace:
    if bin_window is not None and cumulative:
        raise click.UsageError("--bin-window and --cumulative are mutually exclusive")
    if cumulative:
        policy = BinningPolicy(BinningMode.CUMULATIVE)
    elif bin_window is not None:
        policy = BinningPolicy(BinningMode.WINDOW, window=bin_window)
    else:
        raise click.UsageError("choose a binning policy: --bin-window W or --cumulative")
    with open(path) as fh:
        return traceio.parse_temporal_edge_list(fh, policy)


def _parse_kinds(text: str) -> list[CentralityKind]:
    try:
        kinds = [CentralityKind.parse(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if not kinds:
        raise click.UsageError("--centralities must list at least one kind")
    return kinds


def _resolve_seed(seed: int | None) -> int:
    if seed is None:
        seed = secrets.randbits(32)
        click.echo(f"seed not given; using generated seed {seed}", err=True)
    return seed


def _open_output(path: str | None) -> IO[str]:
    if path is None or path == "-":
        return sys.stdout
    return open(path, "w")


ALL_KINDS = ",".join(k.value for k in CentralityKind)


@click.group()
def cli() -> None:
    """Quantify dynamic graph evolution via centrality distances."""


@cli.command(name="centrality")
@click.option("--input", "input_path", required=True, type=click.Path(exists=True))
@click.option("--centralities", default=ALL_KINDS, show_default=True)
@click.option("--alpha", default=0.85, show_default=True)
@click.option("--output", "output_path", default=None)
def centrality_cmd(input_path: str, centralities: str, alpha: float, output_path: str | None) -> None:
    """Print per-vertex centrality values for one snapshot."""
    kinds = _parse_kinds(centralities)
    snap = _read_snapshot(input_path)
    pcfg = PagerankConfig(damping=alpha)
    vectors = {kind: centrality(kind, snap, pcfg) for kind in kinds}
    out = _open_output(output_path)
    out.write("vertex," + ",".join(k.value for k in kinds) + "\n")
    for i, v in enumerate(snap.universe):
        row = ",".join(f"{vectors[k].values[i]:.9f}" for k in kinds)
        out.write(f"{v},{row}\n")


@cli.command(name="ged")
@click.argument("first", type=click.Path(exists=True))
@click.argument("second", type=click.Path(exists=True))
def ged_cmd(first: str, second: str) -> None:
    """Print the graph edit distance between two snapshot files."""
    trace = align_universe([_read_snapshot(first), _read_snapshot(second)])
    click.echo(ged(trace[0], trace[1]))


@cli.command(name="distance")
@click.argument("first", type=click.Path(exists=True))
@click.argument("second", type=click.Path(exists=True))
@click.option("--centralities", default=ALL_KINDS, show_default=True)
@click.option("--alpha", default=0.85, show_default=True)
def distance_cmd(first: str, second: str, centralities: str, alpha: float) -> None:
    """Print centrality distances between two snapshot files."""
    kinds = _parse_kinds(centralities)
    trace = align_universe([_read_snapshot(first), _read_snapshot(second)])
    pcfg = PagerankConfig(damping=alpha)
    for kind in kinds:
        value = centrality_distance(kind, trace[0], trace[1], pcfg)
        click.echo(f"{kind.value},{value:.9f}")


@cli.command(name="generate")
@click.option("--model", required=True, type=click.Choice([m.value for m in generators.GeneratorModel]))
@click.option("--n", required=True, type=int)
@click.option("--steps", default=None, type=int)
@click.option("--d", default=3, show_default=True, type=int)
@click.option("--m", default=1, show_default=True, type=int)
@click.option("--seed", default=None, type=int)
@click.option("--output", "output_path", default=None)
def generate_cmd(
    model: str, n: int, steps: int | None, d: int, m: int, seed: int | None, output_path: str | None
) -> None:
    """Generate a synthetic dynamic trace as a temporal edge list."""
    cfg = generators.GeneratorConfig(
        model=generators.GeneratorModel(model),
        n=n,
        steps=steps,
        d=d,
        m=m,
        seed=_resolve_seed(seed),
    )
    trace = generators.generate(cfg)
    traceio.write_trace_edge_list(trace, _open_output(output_path))


def _sampler_config(seed: int | None, k: int, null_model: str) -> SamplerConfig:
    return SamplerConfig(
        k=k,
        seed=_resolve_seed(seed),
        null_model=NullModelKind.UNIFORM if null_model == "uniform" else NullModelKind.DEGREE_PRESERVING,
    )


@cli.command(name="chronogram")
@click.option("--input", "input_path", required=True, type=click.Path(exists=True))
@click.option("--centralities", default="DC", show_default=True, help="exactly one kind")
@click.option("--seed", default=None, type=int)
@click.option("--k", default=100, show_default=True, type=int)
@click.option("--null-model", default="uniform", type=click.Choice(["uniform", "degree"]), show_default=True)
@click.option("--bin-window", default=None, type=int)
@click.option("--cumulative", is_flag=True)
@click.option("--alpha", default=0.85, show_default=True)
@click.option("--format", "fmt", default="csv", type=click.Choice(["csv", "json"]), show_default=True)
@click.option("--output", "output_path", default=None)
def chronogram_cmd(
    input_path: str,
    centralities: str,
    seed: int | None,
    k: int,
    null_model: str,
    bin_window: int | None,
    cumulative: bool,
    alpha: float,
    fmt: str,
    output_path: str | None,
) -> None:
    """Analyze every transition of a trace against the null model."""
    kinds = _parse_kinds(centralities)
    if len(kinds) != 1:
        raise click.UsageError("chronogram expects exactly one centrality kind")
    trace = _read_trace(input_path, bin_window, cumulative)
    analyses = dynamics.chronogram(
        trace, kinds[0], _sampler_config(seed, k, null_model), PagerankConfig(damping=alpha)
    )
    traceio.export_chronogram(analyses, _open_output(output_path), format=fmt)


@cli.command(name="signature")
@click.option("--input", "input_path", required=True, type=click.Path(exists=True))
@click.option("--centralities", default=ALL_KINDS, show_default=True)
@click.option("--seed", default=None, type=int)
@click.option("--k", default=100, show_default=True, type=int)
@click.option("--null-model", default="uniform", type=click.Choice(["uniform", "degree"]), show_default=True)
@click.option("--bin-window", default=None, type=int)
@click.option("--cumulative", is_flag=True)
@click.option("--alpha", default=0.85, show_default=True)
@click.option("--format", "fmt", default="csv", type=click.Choice(["csv", "json"]), show_default=True)
@click.option("--trace-name", default="", help="label used in the export")
@click.option("--output", "output_path", default=None)
def signature_cmd(
    input_path: str,
    centralities: str,
    seed: int | None,
    k: int,
    null_model: str,
    bin_window: int | None,
    cumulative: bool,
    alpha: float,
    fmt: str,
    trace_name: str,
    output_path: str | None,
) -> None:
    """Compute the dynamic signature (outlier fraction per centrality) of a trace."""
    kinds = _parse_kinds(centralities)
    trace = _read_trace(input_path, bin_window, cumulative)
    sig = dynamics.signature(
        trace,
        kinds,
        _sampler_config(seed, k, null_model),
        PagerankConfig(damping=alpha),
        trace_name=trace_name or Path(input_path).stem,
    )
    traceio.export_signature(sig, _open_output(output_path), format=fmt)


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point with the documented exit-code contract."""
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.exceptions.Exit as exc:
        return 0 if exc.exit_code == 0 else 1
    except (click.UsageError, click.BadParameter) as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return 1
    except (TraceParseError, PagerankConvergenceError, ValueError, RuntimeError, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        return 2


if __name__ == "__main__":
    sys.exit(main())
