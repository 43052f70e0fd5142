"""Benchmark execution, branch-count aggregation, and CSV emission.

Outputs are canonical: records sorted by (instance, solver), probabilities and
means printed with 6 decimal places, and timing zeroed unless explicitly
requested, so identical inputs produce byte-identical files.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .cnf import encode_cnf
from .datasets import DatasetManifest, ManifestEntry, load_instance
from .probmap import ProbMap, read_probmap
from .probmodel import loss_dc
from .solver import BranchSelector, solve_dc, solve_min_dc

#: CLI/CSV solver names and the selector policies behind them.
SOLVER_POLICIES = {
    "mrv": "mrv",
    "ent-fast": "entropy-fast",
    "ent-acc": "entropy-accurate",
}

RECORD_COLUMNS = ("instance_id", "n", "p", "seed", "solver", "outcome",
                  "branches", "backjumps", "elapsed_ms")


@dataclass(frozen=True)
class BenchRecord:
    instance_id: str
    n: int
    p: float
    seed: int
    solver: str
    outcome: str
    branches: int
    backjumps: int
    elapsed_ms: float


def _selector_for(solver: str, entry: ManifestEntry, probs_dir: Path | str | None,
                  temperature: float) -> BranchSelector | str:
    """Build the instance's selector, or an error outcome string."""
    policy = SOLVER_POLICIES.get(solver)
    if policy is None:
        raise ValueError(f"unknown solver {solver!r}; expected one of {sorted(SOLVER_POLICIES)}")
    if policy == "mrv":
        return BranchSelector("mrv")
    if probs_dir is None:
        return "error:no-probmap-dir"
    pm_path = Path(probs_dir) / f"{entry.instance_id}.probmap"
    if not pm_path.exists():
        return "error:missing-probmap"
    pm = read_probmap(pm_path.read_text())
    if pm.n != entry.n:
        return "error:probmap-size-mismatch"
    return BranchSelector(policy, pm, temperature)


def run_benchmark(manifest: DatasetManifest, manifest_dir: Path | str, solvers,
                  probs_dir: Path | str | None = None, minimize: bool = False,
                  backjump: bool = True, temperature: float = 1.0,
                  record_time: bool = False) -> list[BenchRecord]:
    """One record per (instance, solver); per-instance errors don't stop the run."""
    records: list[BenchRecord] = []
    for entry in manifest.entries:
        graph = load_instance(manifest_dir, entry)
        cnf = encode_cnf(graph)
        for solver in solvers:
            sel = _selector_for(solver, entry, probs_dir, temperature)
            if isinstance(sel, str):
                records.append(BenchRecord(entry.instance_id, entry.n, entry.p,
                                           entry.seed, solver, sel, 0, 0, 0.0))
                continue
            if minimize:
                report = solve_min_dc(cnf, graph, sel, backjumping=backjump)
            else:
                report = solve_dc(cnf, graph, sel)
            elapsed_ms = report.elapsed * 1000.0 if record_time else 0.0
            records.append(BenchRecord(entry.instance_id, entry.n, entry.p,
                                       entry.seed, solver, report.outcome,
                                       report.branches, report.backjumps, elapsed_ms))
    records.sort(key=lambda r: (r.instance_id, r.solver))
    return records


def write_records_csv(records, path: Path | str) -> None:
    lines = [",".join(RECORD_COLUMNS)]
    for r in records:
        lines.append(f"{r.instance_id},{r.n},{r.p:.6f},{r.seed},{r.solver},"
                     f"{r.outcome},{r.branches},{r.backjumps},{r.elapsed_ms:.3f}")
    Path(path).write_text("\n".join(lines) + "\n")


def read_records_csv(path: Path | str) -> list[BenchRecord]:
    lines = Path(path).read_text().splitlines()
    if not lines or lines[0] != ",".join(RECORD_COLUMNS):
        raise ValueError(f"unrecognized records CSV header in {path}")
    out = []
    for line in lines[1:]:
        f = line.split(",")
        out.append(BenchRecord(f[0], int(f[1]), float(f[2]), int(f[3]), f[4], f[5],
                               int(f[6]), int(f[7]), float(f[8])))
    return out


@dataclass(frozen=True)
class SolverStats:
    solver: str
    instances: int
    errors: int
    mean_branches: float
    geo_ratio_vs_baseline: float | None


@dataclass(frozen=True)
class PairStats:
    solver_a: str
    solver_b: str
    wins_a: int
    wins_b: int
    ties: int


@dataclass(frozen=True)
class AggregateSummary:
    split: str
    baseline: str
    solvers: tuple[SolverStats, ...]
    pairs: tuple[PairStats, ...]


def aggregate(records, baseline: str, split: str = "all") -> AggregateSummary:
    """Winning counts per solver pair and mean/geometric-ratio statistics.

    A win is strictly fewer branches on an instance.  The geometric-mean ratio
    of a solver against the baseline is exp(mean(ln(branches/baseline))).
    The sat/unsat split keys on the baseline's outcome per instance.
    """
    if split not in ("all", "sat", "unsat"):
        raise ValueError(f"unknown split {split!r}")
    by_instance: dict[str, dict[str, BenchRecord]] = {}
    solvers: list[str] = []
    for r in records:
        per = by_instance.setdefault(r.instance_id, {})
        if r.solver in per:
            raise ValueError(f"duplicate record for ({r.instance_id}, {r.solver})")
        per[r.solver] = r
        if r.solver not in solvers:
            solvers.append(r.solver)
    if not by_instance:
        raise ValueError("no records to aggregate")
    if baseline not in solvers:
        raise ValueError(f"baseline {baseline!r} absent from records")

    def usable(r: BenchRecord | None) -> bool:
        return r is not None and not r.outcome.startswith("error")

    kept: dict[str, dict[str, BenchRecord]] = {}
    errors = {s: 0 for s in solvers}
    for iid, per in by_instance.items():
        base = per.get(baseline)
        if not usable(base):
            for s, r in per.items():
                if not usable(r):
                    errors[s] += 1
            continue
        for s, r in per.items():
            if not usable(r):
                errors[s] += 1
        outcomes = {r.outcome for r in per.values() if usable(r)}
        if len(outcomes) > 1:
            raise ValueError(f"solvers disagree on {iid}: {sorted(outcomes)}")
        if split == "sat" and base.outcome != "found":
            continue
        if split == "unsat" and base.outcome != "not-found":
            continue
        kept[iid] = per

    solver_stats = []
    for s in solvers:
        rows = [per[s] for per in kept.values() if usable(per.get(s))]
        mean = float(np.mean([r.branches for r in rows])) if rows else math.nan
        geo = None
        if s != baseline:
            logs = []
            for per in kept.values():
                r, b = per.get(s), per.get(baseline)
                if usable(r) and usable(b):
                    if r.branches < 1 or b.branches < 1:
                        raise ValueError("branch counts must be >= 1 for ratio aggregation")
                    logs.append(math.log(r.branches / b.branches))
            geo = math.exp(float(np.mean(logs))) if logs else math.nan
        solver_stats.append(SolverStats(s, len(rows), errors[s], mean, geo))

    pair_stats = []
    for i, a in enumerate(solvers):
        for b in solvers[i + 1:]:
            wins_a = wins_b = ties = 0
            for per in kept.values():
                ra, rb = per.get(a), per.get(b)
                if not (usable(ra) and usable(rb)):
                    continue
                if ra.branches < rb.branches:
                    wins_a += 1
                elif rb.branches < ra.branches:
                    wins_b += 1
                else:
                    ties += 1
            pair_stats.append(PairStats(a, b, wins_a, wins_b, ties))

    return AggregateSummary(split, baseline, tuple(solver_stats), tuple(pair_stats))


def write_summary_csv(summary: AggregateSummary, out_prefix: Path | str) -> tuple[Path, Path]:
    """Two files: <prefix>.solvers.csv and <prefix>.pairs.csv."""
    prefix = Path(out_prefix)
    solvers_path = prefix.with_name(prefix.name + ".solvers.csv")
    pairs_path = prefix.with_name(prefix.name + ".pairs.csv")
    lines = ["split,solver,instances,errors,mean_branches,geo_ratio_vs_baseline"]
    for s in summary.solvers:
        geo = "" if s.geo_ratio_vs_baseline is None else f"{s.geo_ratio_vs_baseline:.6f}"
        lines.append(f"{summary.split},{s.solver},{s.instances},{s.errors},"
                     f"{s.mean_branches:.6f},{geo}")
    solvers_path.write_text("\n".join(lines) + "\n")
    lines = ["split,solver_a,solver_b,wins_a,wins_b,ties"]
    for p in summary.pairs:
        lines.append(f"{summary.split},{p.solver_a},{p.solver_b},{p.wins_a},{p.wins_b},{p.ties}")
    pairs_path.write_text("\n".join(lines) + "\n")
    return solvers_path, pairs_path


@dataclass(frozen=True)
class GridCell:
    n: int
    p: float
    instances: int
    mean_loss: float
    std_loss: float


def grid_loss_report(manifest: DatasetManifest, manifest_dir: Path | str,
                     uniform_p: float | None = None,
                     probs_dir: Path | str | None = None) -> list[GridCell]:
    """Mean and standard deviation of the dominating-clique loss per (n, p) cell."""
    if (uniform_p is None) == (probs_dir is None):
        raise ValueError("exactly one probability source: uniform_p or probs_dir")
    cells: dict[tuple[int, float], list[float]] = {}
    for entry in manifest.entries:
        graph = load_instance(manifest_dir, entry)
        if uniform_p is not None:
            pm = ProbMap.uniform(graph.n, uniform_p)
        else:
            pm_path = Path(probs_dir) / f"{entry.instance_id}.probmap"
            pm = read_probmap(pm_path.read_text())
        cells.setdefault((entry.n, entry.p), []).append(loss_dc(graph, pm))
    out = []
    for (n, p), losses in sorted(cells.items()):
        arr = np.asarray(losses)
        out.append(GridCell(n, p, len(losses), float(arr.mean()), float(arr.std())))
    return out


def write_grid_csv(cells, path: Path | str) -> None:
    lines = ["n,p,instances,mean_loss,std_loss"]
    for c in cells:
        lines.append(f"{c.n},{c.p:.6f},{c.instances},{c.mean_loss:.6f},{c.std_loss:.6f}")
    Path(path).write_text("\n".join(lines) + "\n")
