"""Graph tensors and mini-batching for training."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import torch

from .formats import GraphFile, read_dimacs, read_manifest


@dataclass
class GraphData:
    """One graph as tensors: 1-based file vertices become rows 0..n-1."""

    name: str
    n: int
    edge_index: torch.Tensor   # (2, 2m) both directions
    features: torch.Tensor     # (n, 1) scaled degrees

    _adj: torch.Tensor | None = None

    @classmethod
    def from_graph_file(cls, name: str, gf: GraphFile) -> "GraphData":
        if gf.edges:
            src = [u - 1 for u, v in gf.edges] + [v - 1 for u, v in gf.edges]
            dst = [v - 1 for u, v in gf.edges] + [u - 1 for u, v in gf.edges]
            edge_index = torch.tensor([src, dst], dtype=torch.long)
        else:
            edge_index = torch.zeros((2, 0), dtype=torch.long)
        deg = torch.zeros(gf.n)
        if edge_index.shape[1]:
            deg.index_add_(0, edge_index[1], torch.ones(edge_index.shape[1]))
        features = (deg / gf.n).unsqueeze(1)
        return cls(name, gf.n, edge_index, features)

    def adjacency(self) -> torch.Tensor:
        """Dense boolean adjacency, cached."""
        if self._adj is None:
            adj = torch.zeros((self.n, self.n), dtype=torch.bool)
            if self.edge_index.shape[1]:
                adj[self.edge_index[0], self.edge_index[1]] = True
            self._adj = adj
        return self._adj


def load_manifest_graphs(manifest_path: Path | str) -> list[GraphData]:
    manifest_path = Path(manifest_path)
    rows = read_manifest(manifest_path)
    out = []
    for row in rows:
        gf = read_dimacs(manifest_path.parent / row.path)
        out.append(GraphData.from_graph_file(row.instance_id, gf))
    return out


def load_many(manifest_paths) -> list[GraphData]:
    graphs: list[GraphData] = []
    for p in manifest_paths:
        graphs.extend(load_manifest_graphs(p))
    return graphs


@dataclass
class Batch:
    x: torch.Tensor
    edge_index: torch.Tensor
    graphs: list[GraphData]
    offsets: list[int]

    def slices(self):
        for g, off in zip(self.graphs, self.offsets):
            yield g, off, off + g.n


def collate(graphs: list[GraphData]) -> Batch:
    """Block-diagonal batch: node rows concatenated, edge indices offset."""
    xs, eis, offsets = [], [], []
    off = 0
    for g in graphs:
        xs.append(g.features)
        eis.append(g.edge_index + off)
        offsets.append(off)
        off += g.n
    return Batch(torch.cat(xs, dim=0), torch.cat(eis, dim=1), list(graphs), offsets)
