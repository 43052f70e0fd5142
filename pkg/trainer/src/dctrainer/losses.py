"""Differentiable training objectives over per-vertex probabilities.

All objectives are built from two log-domain bounds on a random vertex subset
drawn with the given probabilities:

  clique term     sum over non-adjacent pairs {i,j} of log(1 - p_i p_j)
  domination term sum over vertices i of log(1 - prod_{j in N[i]} (1 - p_j))

"dc" maximizes both bounds.  "maxclq" trades the clique bound against the
expected subset size; the "mindc" variants add the log expected size to the
"dc" objective, either over the whole space or restricted to the subset event
generated by a vertex permutation (a fresh permutation each call during
training).
"""

from __future__ import annotations

import torch

from .data import GraphData

_TINY = 1e-300  # keeps logs finite if a bound factor collapses to zero


def clique_log_bound(p: torch.Tensor, data: GraphData) -> torch.Tensor:
    n = data.n
    adj = data.adjacency()
    iu = torch.triu_indices(n, n, offset=1)
    nonedge = ~adj[iu[0], iu[1]]
    pi = p[iu[0][nonedge]]
    pj = p[iu[1][nonedge]]
    return torch.log((1.0 - pi * pj).clamp_min(_TINY)).sum()


def dominate_log_bound(p: torch.Tensor, data: GraphData) -> torch.Tensor:
    adj = data.adjacency()
    closed = (adj | torch.eye(data.n, dtype=torch.bool)).to(p.dtype)
    miss_log = closed @ torch.log1p(-p)           # log prod_{j in N[i]} (1 - p_j)
    return torch.log((-torch.expm1(miss_log)).clamp_min(_TINY)).sum()


def expected_size(p: torch.Tensor) -> torch.Tensor:
    return p.sum()


def permutation_expected_size(p: torch.Tensor, data: GraphData,
                              order: torch.Tensor) -> torch.Tensor:
    """Expected subset size restricted to the event a permutation generates.

    ``order`` is a 0-based vertex permutation; position t handles vertex
    order[t], which must be present, all earlier vertices absent, and all
    later non-neighbors absent; the conditional size is 1 plus the mass of
    its not-yet-fixed neighbors.
    """
    n = data.n
    adj = data.adjacency()
    rank = torch.empty(n, dtype=torch.long)
    rank[order] = torch.arange(n)
    later = rank.unsqueeze(0) > rank.unsqueeze(1)      # later[i, k]: k after i
    lg = torch.log1p(-p)
    prefix_log = (~later & ~torch.eye(n, dtype=torch.bool)).to(p.dtype) @ lg
    later_nonadj_log = (later & ~adj).to(p.dtype) @ lg
    free_mass = (later & adj).to(p.dtype) @ p
    slice_prob = p * torch.exp(prefix_log + later_nonadj_log)
    return (slice_prob * (1.0 + free_mass)).sum()


def loss_dc(p: torch.Tensor, data: GraphData) -> torch.Tensor:
    return -(dominate_log_bound(p, data) + clique_log_bound(p, data))


def loss_max_clique(p: torch.Tensor, data: GraphData) -> torch.Tensor:
    return -torch.log(expected_size(p)) - clique_log_bound(p, data)


def loss_min_dc_plain(p: torch.Tensor, data: GraphData) -> torch.Tensor:
    return loss_dc(p, data) + torch.log(expected_size(p))


def loss_min_dc_perm(p: torch.Tensor, data: GraphData,
                     order: torch.Tensor) -> torch.Tensor:
    return loss_dc(p, data) + torch.log(permutation_expected_size(p, data, order))


#: Loss mode names accepted by the trainer.
LOSS_MODES = ("maxclq", "dc", "mindc-plain", "mindc-perm")


def graph_loss(mode: str, p: torch.Tensor, data: GraphData,
               generator: torch.Generator | None = None) -> torch.Tensor:
    if mode == "maxclq":
        return loss_max_clique(p, data)
    if mode == "dc":
        return loss_dc(p, data)
    if mode == "mindc-plain":
        return loss_min_dc_plain(p, data)
    if mode == "mindc-perm":
        order = torch.randperm(data.n, generator=generator)
        return loss_min_dc_perm(p, data, order)
    raise ValueError(f"unknown loss mode {mode!r}; expected one of {LOSS_MODES}")
