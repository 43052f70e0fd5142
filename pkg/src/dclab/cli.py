"""Command-line surface: generate datasets, solve instances, benchmark, aggregate.

Global flags --seed and --out live on the group; subcommands read them from
the context.  See README for worked examples.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .bench import (SOLVER_POLICIES, aggregate, grid_loss_report, read_records_csv,
                    run_benchmark, write_grid_csv, write_records_csv, write_summary_csv)
from .cnf import encode_cnf
from .datasets import PRESETS, DatasetManifest, gen_dataset
from .decode import approximation_ratio, decode_fast, decode_slow
from .graph import parse_dimacs
from .probmap import ProbMap, read_probmap
from .probmodel import loss_dc, loss_max_clique, loss_min_dc
from .solver import BranchSelector, solve_dc, solve_min_dc

HEURISTICS = tuple(SOLVER_POLICIES)


@click.group()
@click.option("--seed", type=int, default=0, show_default=True, help="Base seed for generation.")
@click.option("--out", type=click.Path(path_type=Path), default=None, help="Output file or directory.")
@click.pass_context
def main(ctx, seed: int, out: Path | None):
    """Dominating-clique search laboratory."""
    ctx.ensure_object(dict)
    ctx.obj["seed"] = seed
    ctx.obj["out"] = out


def _require_out(ctx) -> Path:
    out = ctx.obj.get("out")
    if out is None:
        raise click.UsageError("this command needs --out (pass it before the subcommand)")
    return out


def _load_probmap_arg(n: int, probs: Path | None, uniform: float | None) -> ProbMap:
    if (probs is None) == (uniform is None):
        raise click.UsageError("pass exactly one of --probs or --uniform")
    if probs is not None:
        return read_probmap(probs.read_text())
    return ProbMap.uniform(n, uniform)


@main.command()
@click.argument("preset", type=click.Choice(PRESETS))
@click.option("--count-per-cell", type=int, default=None, help="Keep only the first k instances per (n,p) cell.")
@click.option("--only-n", type=int, multiple=True, help="Restrict to these vertex counts.")
@click.pass_context
def gen(ctx, preset: str, count_per_cell: int | None, only_n):
    """Generate a dataset preset into --out."""
    out = _require_out(ctx)
    manifest = gen_dataset(preset, ctx.obj["seed"], out,
                           count_per_cell=count_per_cell,
                           only_n=only_n or None)
    click.echo(f"wrote {len(manifest.entries)} instances to {out}")


def _selector_from_flags(graph, heuristic: str, probs: Path | None, temperature: float) -> BranchSelector:
    policy = SOLVER_POLICIES[heuristic]
    if policy == "mrv":
        return BranchSelector("mrv")
    if probs is None:
        raise click.UsageError(f"--heuristic {heuristic} requires --probs")
    pm = read_probmap(probs.read_text())
    if pm.n != graph.n:
        raise click.UsageError(f"probability map has {pm.n} entries, graph has {graph.n}")
    return BranchSelector(policy, pm, temperature)


@main.command()
@click.argument("graph_file", type=click.Path(exists=True, path_type=Path))
@click.option("--heuristic", type=click.Choice(HEURISTICS), default="mrv", show_default=True)
@click.option("--probs", type=click.Path(exists=True, path_type=Path), default=None)
@click.option("--min", "minimize", is_flag=True, help="Find a minimum dominating clique.")
@click.option("--backjump", type=click.Choice(["on", "off"]), default="on", show_default=True)
@click.option("--temperature", type=float, default=1.0, show_default=True)
def solve(graph_file: Path, heuristic: str, probs: Path | None, minimize: bool,
          backjump: str, temperature: float):
    """Solve one DIMACS instance and print the report."""
    graph = parse_dimacs(graph_file.read_text())
    cnf = encode_cnf(graph)
    sel = _selector_from_flags(graph, heuristic, probs, temperature)
    if minimize:
        report = solve_min_dc(cnf, graph, sel, backjumping=backjump == "on")
    else:
        report = solve_dc(cnf, graph, sel)
    click.echo(f"outcome: {report.outcome}")
    if report.found:
        click.echo(f"solution: {' '.join(map(str, report.solution))}")
    if report.min_size is not None:
        click.echo(f"min_size: {report.min_size}")
    click.echo(f"branches: {report.branches}")
    click.echo(f"backjumps: {report.backjumps}")
    click.echo(f"elapsed_ms: {report.elapsed * 1000.0:.3f}")


@main.command()
@click.argument("manifest_file", type=click.Path(exists=True, path_type=Path))
@click.option("--solvers", default="mrv", show_default=True,
              help="Comma-separated subset of: " + ",".join(HEURISTICS))
@click.option("--probs-dir", type=click.Path(path_type=Path), default=None)
@click.option("--min", "minimize", is_flag=True)
@click.option("--backjump", type=click.Choice(["on", "off"]), default="on", show_default=True)
@click.option("--temperature", type=float, default=1.0, show_default=True)
@click.option("--record-time", is_flag=True,
              help="Write wall-clock times (breaks byte-reproducibility).")
@click.pass_context
def bench(ctx, manifest_file: Path, solvers: str, probs_dir: Path | None,
          minimize: bool, backjump: str, temperature: float, record_time: bool):
    """Run solvers over a manifest; write a records CSV to --out."""
    out = _require_out(ctx)
    manifest = DatasetManifest.load(manifest_file)
    names = [s.strip() for s in solvers.split(",") if s.strip()]
    records = run_benchmark(manifest, manifest_file.parent, names,
                            probs_dir=probs_dir, minimize=minimize,
                            backjump=backjump == "on", temperature=temperature,
                            record_time=record_time)
    write_records_csv(records, out)
    click.echo(f"wrote {len(records)} records to {out}")


@main.command(name="aggregate")
@click.argument("records_file", type=click.Path(exists=True, path_type=Path))
@click.option("--baseline", default="mrv", show_default=True)
@click.option("--split", type=click.Choice(["all", "sat", "unsat"]), default="all", show_default=True)
@click.pass_context
def aggregate_cmd(ctx, records_file: Path, baseline: str, split: str):
    """Summarize a records CSV into per-solver and pairwise tables."""
    out = _require_out(ctx)
    summary = aggregate(read_records_csv(records_file), baseline, split)
    solvers_path, pairs_path = write_summary_csv(summary, out)
    click.echo(f"wrote {solvers_path} and {pairs_path}")


@main.command()
@click.argument("manifest_file", type=click.Path(exists=True, path_type=Path))
@click.option("--uniform", type=float, default=None, help="Uniform probability for every vertex.")
@click.option("--probs-dir", type=click.Path(path_type=Path), default=None)
@click.pass_context
def grid(ctx, manifest_file: Path, uniform: float | None, probs_dir: Path | None):
    """Per-(n,p) mean dominating-clique loss over a manifest; CSV to --out."""
    out = _require_out(ctx)
    manifest = DatasetManifest.load(manifest_file)
    cells = grid_loss_report(manifest, manifest_file.parent,
                             uniform_p=uniform, probs_dir=probs_dir)
    write_grid_csv(cells, out)
    click.echo(f"wrote {len(cells)} cells to {out}")


@main.command()
@click.argument("graph_file", type=click.Path(exists=True, path_type=Path))
@click.option("--probs", type=click.Path(exists=True, path_type=Path), default=None)
@click.option("--uniform", type=float, default=None)
def loss(graph_file: Path, probs: Path | None, uniform: float | None):
    """Print the loss values of a graph under a probability map."""
    graph = parse_dimacs(graph_file.read_text())
    pm = _load_probmap_arg(graph.n, probs, uniform)
    click.echo(f"loss_max_clique: {loss_max_clique(graph, pm):.6f}")
    click.echo(f"loss_dc: {loss_dc(graph, pm):.6f}")
    click.echo(f"loss_min_dc: {loss_min_dc(graph, pm):.6f}")


@main.command(name="decode-clique")
@click.argument("graph_file", type=click.Path(exists=True, path_type=Path))
@click.option("--probs", type=click.Path(exists=True, path_type=Path), default=None)
@click.option("--uniform", type=float, default=None)
@click.option("--mode", type=click.Choice(["fast", "slow", "both"]), default="both", show_default=True)
@click.option("--ratio", is_flag=True, help="Also print size over the exact maximum.")
def decode_clique(graph_file: Path, probs: Path | None, uniform: float | None,
                  mode: str, ratio: bool):
    """Greedy clique decoding from a probability map."""
    graph = parse_dimacs(graph_file.read_text())
    pm = _load_probmap_arg(graph.n, probs, uniform)
    decoders = {"fast": decode_fast, "slow": decode_slow}
    names = ["fast", "slow"] if mode == "both" else [mode]
    for name in names:
        result = decoders[name](graph, pm)
        line = f"{name}: size {result.size}, vertices {' '.join(map(str, result.clique))}"
        if ratio:
            line += f", ratio {approximation_ratio(result.clique, graph):.6f}"
        click.echo(line)


if __name__ == "__main__":
    main(sys.argv[1:])
