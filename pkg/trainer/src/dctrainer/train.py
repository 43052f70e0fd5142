"""Training loop, probability export, and the CSV training log."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import torch

from .data import Batch, GraphData, collate
from .formats import write_probmap_file
from .losses import LOSS_MODES, graph_loss
from .model import ProbMapNet, save_model


@dataclass
class TrainConfig:
    loss: str = "dc"
    epochs: int = 50
    batch_size: int = 32
    lr: float = 1e-3
    hidden: int = 64
    seed: int = 0

    def __post_init__(self):
        if self.loss not in LOSS_MODES:
            raise ValueError(f"unknown loss mode {self.loss!r}; expected one of {LOSS_MODES}")
        if self.epochs < 1 or self.batch_size < 1:
            raise ValueError("epochs and batch_size must be positive")


@dataclass
class EpochLog:
    epoch: int
    mean_loss: float


def _batch_loss(model: ProbMapNet, batch: Batch, mode: str,
                generator: torch.Generator) -> torch.Tensor:
    p = model(batch.x, batch.edge_index)
    losses = [graph_loss(mode, p[a:b], g, generator) for g, a, b in batch.slices()]
    return torch.stack(losses).mean()


def train(graphs: list[GraphData], cfg: TrainConfig,
          log_path: Path | str | None = None,
          checkpoint_path: Path | str | None = None) -> tuple[ProbMapNet, list[EpochLog]]:
    """Train on the given graphs; returns the model and per-epoch mean losses.

    Deterministic for a fixed seed on a fixed torch build.  Aborts with
    diagnostics if the loss stops being finite.
    """
    if not graphs:
        raise ValueError("no training graphs")
    torch.manual_seed(cfg.seed)
    generator = torch.Generator().manual_seed(cfg.seed)
    model = ProbMapNet(hidden=cfg.hidden)
    optimizer = torch.optim.Adam(model.parameters(), lr=cfg.lr)
    logs: list[EpochLog] = []
    for epoch in range(1, cfg.epochs + 1):
        model.train()
        perm = torch.randperm(len(graphs), generator=generator).tolist()
        total = 0.0
        count = 0
        for start in range(0, len(perm), cfg.batch_size):
            chunk = [graphs[i] for i in perm[start:start + cfg.batch_size]]
            batch = collate(chunk)
            optimizer.zero_grad()
            loss = _batch_loss(model, batch, cfg.loss, generator)
            if not torch.isfinite(loss):
                raise RuntimeError(
                    f"non-finite loss at epoch {epoch}, batch starting {start}: {loss.item()}")
            loss.backward()
            optimizer.step()
            total += loss.item() * len(chunk)
            count += len(chunk)
        logs.append(EpochLog(epoch, total / count))
    if log_path is not None:
        lines = ["epoch,mean_loss"]
        lines.extend(f"{row.epoch},{row.mean_loss:.6f}" for row in logs)
        Path(log_path).write_text("\n".join(lines) + "\n")
    if checkpoint_path is not None:
        save_model(model, checkpoint_path)
    return model, logs


def infer_probabilities(model: ProbMapNet, graph: GraphData) -> list[float]:
    model.eval()
    with torch.no_grad():
        p = model(graph.features, graph.edge_index)
    return [float(x) for x in p]


def export_probmap(model: ProbMapNet, graph: GraphData, path: Path | str) -> None:
    write_probmap_file(path, infer_probabilities(model, graph))


def export_for_manifest(model: ProbMapNet, graphs: list[GraphData],
                        out_dir: Path | str) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for g in graphs:
        path = out / f"{g.name}.probmap"
        export_probmap(model, g, path)
        written.append(path)
    return written
