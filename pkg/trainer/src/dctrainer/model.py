"""Message-passing network that maps a graph to per-vertex probabilities.

Six graph-isomorphism layers (sum aggregation with a learned epsilon, then a
two-layer MLP) followed by two linear layers; batch normalization after every
hidden layer; a sigmoid head keeps outputs strictly inside (0, 1).
"""

from __future__ import annotations

import torch
from torch import nn

OUTPUT_EPS = 1e-6  # keep probabilities away from the log singularities


class GinLayer(nn.Module):
    def __init__(self, in_dim: int, out_dim: int):
        super().__init__()
        self.eps = nn.Parameter(torch.zeros(()))
        self.mlp = nn.Sequential(
            nn.Linear(in_dim, out_dim),
            nn.ReLU(),
            nn.Linear(out_dim, out_dim),
        )

    def forward(self, x: torch.Tensor, edge_index: torch.Tensor) -> torch.Tensor:
        agg = torch.zeros_like(x)
        if edge_index.shape[1]:
            agg.index_add_(0, edge_index[1], x[edge_index[0]])
        return self.mlp((1.0 + self.eps) * x + agg)


class ProbMapNet(nn.Module):
    NUM_GIN_LAYERS = 6

    def __init__(self, hidden: int = 64):
        super().__init__()
        self.hidden = hidden
        dims = [1] + [hidden] * self.NUM_GIN_LAYERS
        self.gins = nn.ModuleList(GinLayer(a, b) for a, b in zip(dims, dims[1:]))
        self.gin_norms = nn.ModuleList(nn.BatchNorm1d(hidden) for _ in range(self.NUM_GIN_LAYERS))
        self.lin1 = nn.Linear(hidden, hidden)
        self.lin1_norm = nn.BatchNorm1d(hidden)
        self.lin2 = nn.Linear(hidden, 1)

    def forward(self, x: torch.Tensor, edge_index: torch.Tensor) -> torch.Tensor:
        for gin, norm in zip(self.gins, self.gin_norms):
            x = norm(gin(x, edge_index))
        x = torch.relu(self.lin1_norm(self.lin1(x)))
        p = torch.sigmoid(self.lin2(x)).squeeze(-1)
        return p.clamp(OUTPUT_EPS, 1.0 - OUTPUT_EPS)


def save_model(model: ProbMapNet, path) -> None:
    torch.save({"hidden": model.hidden, "state": model.state_dict()}, path)


def load_model(path) -> ProbMapNet:
    doc = torch.load(path, weights_only=True)
    model = ProbMapNet(hidden=doc["hidden"])
    model.load_state_dict(doc["state"])
    model.eval()
    return model
