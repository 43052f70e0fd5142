"""Acceptance gate for the trainer: smoke criterion and solver benefit.

Trains real models on generated datasets, so this module dominates the
suite's runtime (a couple of minutes on CPU).
"""

import dataclasses

import dclab
import torch
from dclab.bench import aggregate, run_benchmark
from dclab.datasets import gen_dataset

from dctrainer.data import load_manifest_graphs
from dctrainer.losses import loss_dc
from dctrainer.train import TrainConfig, export_for_manifest, train


def report(capsys, name: str, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    assert ok, f"{name}: {detail}"


def test_trainer_smoke(capsys, tmp_path):
    # 210 mixed-density instances, none larger than 100 vertices.
    gen_dataset("gridB", 0x711, tmp_path / "data", only_n=[50, 75, 100], count_per_cell=14)
    graphs = load_manifest_graphs(tmp_path / "data" / "manifest.json")
    assert len(graphs) == 210

    cfg = TrainConfig(loss="dc", epochs=50, batch_size=32, lr=1e-3, hidden=64, seed=7)
    model, logs = train(graphs, cfg, log_path=tmp_path / "log.csv")
    initial, final = logs[0].mean_loss, logs[-1].mean_loss
    reduced = final <= 0.8 * initial

    exported = export_for_manifest(model, graphs[:20], tmp_path / "probs")
    parse_ok = True
    loss_gap = 0.0
    for path in exported[:5]:
        pm = dclab.read_probmap(path.read_text())
        parse_ok &= all(0.0 < x < 1.0 for x in pm.p)
        graph = next(g for g in graphs if g.name == path.stem)
        ours = float(loss_dc(torch.tensor(pm.p, dtype=torch.float64), graph))
        reference = dclab.loss_dc(_dclab_graph(tmp_path / "data", path.stem), pm)
        loss_gap = max(loss_gap, abs(ours - reference))

    ok = reduced and parse_ok and loss_gap <= 1e-4
    report(capsys, "trainer smoke", ok,
           f"loss {initial:.1f} -> {final:.1f} ({final / initial:.2f}x), "
           f"{len(exported)} maps parse, cross-loss gap {loss_gap:.2e}")


def _dclab_graph(data_dir, instance_id) -> dclab.Graph:
    return dclab.parse_dimacs((data_dir / f"{instance_id}.dimacs").read_text())


def test_heuristic_benefit(capsys, tmp_path):
    train_graphs = []
    for seed in (101, 102, 103, 104):
        d = tmp_path / f"train{seed}"
        gen_dataset("dc-hard", seed, d, only_n=[100])
        train_graphs.extend(load_manifest_graphs(d / "manifest.json"))
    assert len(train_graphs) == 200

    cfg = TrainConfig(loss="dc", epochs=30, batch_size=32, lr=1e-3, hidden=64, seed=11)
    model, _ = train(train_graphs, cfg)

    records = []
    for seed in (201, 202, 203, 204, 205):
        d = tmp_path / f"held{seed}"
        manifest = gen_dataset("dc-hard", seed, d, only_n=[100])
        held = load_manifest_graphs(d / "manifest.json")
        probs = tmp_path / f"probs{seed}"
        export_for_manifest(model, held, probs)
        for r in run_benchmark(manifest, d, ["mrv", "ent-acc"], probs_dir=probs):
            records.append(dataclasses.replace(r, instance_id=f"{seed}:{r.instance_id}"))

    summary = aggregate(records, baseline="mrv", split="unsat")
    acc = next(s for s in summary.solvers if s.solver == "ent-acc")
    ok = acc.instances >= 100 and acc.geo_ratio_vs_baseline <= 1.02
    report(capsys, "heuristic benefit (unsat, n=100)", ok,
           f"{acc.instances} unsat held-out instances, "
           f"geo branch ratio vs mrv {acc.geo_ratio_vs_baseline:.4f} (gate 1.02)")
