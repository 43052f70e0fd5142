"""Unsupervised training of per-vertex probability maps for graph search.

Reads DIMACS instances through dataset manifests, trains a message-passing
network against probabilistic bound objectives, and exports probmap v1 files
that the solver package consumes.
"""

from .data import GraphData, collate, load_manifest_graphs, load_many
from .formats import read_dimacs, read_manifest, read_probmap_file, write_probmap_file
from .losses import (LOSS_MODES, clique_log_bound, dominate_log_bound, graph_loss,
                     loss_dc, loss_max_clique, loss_min_dc_perm, loss_min_dc_plain,
                     permutation_expected_size)
from .model import ProbMapNet, load_model, save_model
from .train import (EpochLog, TrainConfig, export_for_manifest, export_probmap,
                    infer_probabilities, train)

__all__ = [
    "GraphData", "collate", "load_manifest_graphs", "load_many",
    "read_dimacs", "read_manifest", "read_probmap_file", "write_probmap_file",
    "LOSS_MODES", "clique_log_bound", "dominate_log_bound", "graph_loss",
    "loss_dc", "loss_max_clique", "loss_min_dc_perm", "loss_min_dc_plain",
    "permutation_expected_size",
    "ProbMapNet", "load_model", "save_model",
    "EpochLog", "TrainConfig", "export_for_manifest", "export_probmap",
    "infer_probabilities", "train",
]

__version__ = "0.1.0"
