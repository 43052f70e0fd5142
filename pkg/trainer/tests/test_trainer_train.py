"""Training loop behavior on small datasets."""

import dclab
import pytest
import torch
from trainbridge import graphdata_from_dclab

from importlib import import_module

from dctrainer.train import TrainConfig, export_for_manifest, train

train_module = import_module("dctrainer.train")


def tiny_graphs(count: int = 12, n: int = 20):
    return [graphdata_from_dclab(dclab.gnp_generate(n, 0.4, seed), name=f"t{seed}")
            for seed in range(count)]


def test_zero_learning_rate_keeps_loss_constant():
    graphs = tiny_graphs()
    cfg = TrainConfig(loss="dc", epochs=4, batch_size=len(graphs), lr=0.0, hidden=16, seed=3)
    _, logs = train(graphs, cfg)
    first = logs[0].mean_loss
    assert all(abs(row.mean_loss - first) <= 1e-6 * abs(first) for row in logs)


def test_training_reduces_dc_loss():
    graphs = tiny_graphs(16)
    cfg = TrainConfig(loss="dc", epochs=15, batch_size=8, lr=3e-3, hidden=16, seed=0)
    _, logs = train(graphs, cfg)
    assert logs[-1].mean_loss < logs[0].mean_loss


def test_all_loss_modes_run():
    graphs = tiny_graphs(6, n=12)
    for mode in ("maxclq", "dc", "mindc-plain", "mindc-perm"):
        cfg = TrainConfig(loss=mode, epochs=2, batch_size=6, hidden=8, seed=1)
        _, logs = train(graphs, cfg)
        assert len(logs) == 2


def test_deterministic_given_seed():
    graphs = tiny_graphs(8, n=15)
    cfg = TrainConfig(loss="dc", epochs=3, batch_size=4, hidden=8, seed=9)
    _, a = train(graphs, cfg)
    _, b = train(graphs, cfg)
    assert [r.mean_loss for r in a] == [r.mean_loss for r in b]


def test_nan_loss_aborts_with_diagnostics(monkeypatch):
    graphs = tiny_graphs(4, n=10)
    monkeypatch.setattr(train_module, "graph_loss",
                        lambda *a, **k: torch.tensor(float("nan")))
    with pytest.raises(RuntimeError, match="non-finite loss at epoch 1"):
        train(graphs, TrainConfig(epochs=1, batch_size=4, hidden=8))


def test_log_csv_and_checkpoint(tmp_path):
    graphs = tiny_graphs(4, n=10)
    cfg = TrainConfig(loss="dc", epochs=2, batch_size=4, hidden=8, seed=0)
    model, logs = train(graphs, cfg, log_path=tmp_path / "log.csv",
                        checkpoint_path=tmp_path / "model.pt")
    lines = (tmp_path / "log.csv").read_text().splitlines()
    assert lines[0] == "epoch,mean_loss" and len(lines) == 3
    assert (tmp_path / "model.pt").exists()
    written = export_for_manifest(model, graphs, tmp_path / "probs")
    assert [p.name for p in written] == [f"{g.name}.probmap" for g in graphs]


def test_config_validation():
    with pytest.raises(ValueError, match="unknown loss mode"):
        TrainConfig(loss="bce")
    with pytest.raises(ValueError, match="positive"):
        TrainConfig(epochs=0)
    with pytest.raises(ValueError, match="no training graphs"):
        train([], TrainConfig())
