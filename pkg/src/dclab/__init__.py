"""Deterministic laboratory for exact dominating-clique search.

Graph and probability-map plumbing, the product-Bernoulli probability model
with its loss functions and entropy branch scores, brute-force oracles, the
backtracking solvers, greedy clique decoding, and a benchmark harness.
"""

from .cnf import CnfInstance, encode_cnf
from .graph import DimacsError, Graph, gnp_generate, parse_dimacs, write_dimacs
from .probmap import ProbMap, ProbMapError, read_probmap, write_probmap
from .probmodel import (LogBounds, EntropyScore, bernoulli_entropy,
                        clique_dominate_log_bounds, joint_entropy_accurate,
                        joint_entropy_fast, loss_dc, loss_max_clique, loss_min_dc,
                        permutation_event_expectation, softmax_reweigh,
                        subset_probability)
from .oracle import (EventPredicate, enumerate_dominating_cliques,
                     event_from_permutation, exact_event_probability,
                     exact_max_clique, is_clique, is_dominating,
                     is_dominating_clique)
from .solver import (BranchSelector, SearchState, SolveReport,
                     select_branch_clause, solve_dc, solve_min_dc)
from .decode import DecodeResult, approximation_ratio, decode_fast, decode_slow
from .rng import RngStream, derive_seed, splitmix64

__all__ = [
    "CnfInstance", "encode_cnf",
    "DimacsError", "Graph", "gnp_generate", "parse_dimacs", "write_dimacs",
    "ProbMap", "ProbMapError", "read_probmap", "write_probmap",
    "LogBounds", "EntropyScore", "bernoulli_entropy", "clique_dominate_log_bounds",
    "joint_entropy_accurate", "joint_entropy_fast", "loss_dc", "loss_max_clique",
    "loss_min_dc", "permutation_event_expectation", "softmax_reweigh",
    "subset_probability",
    "EventPredicate", "enumerate_dominating_cliques", "event_from_permutation",
    "exact_event_probability", "exact_max_clique", "is_clique", "is_dominating",
    "is_dominating_clique",
    "BranchSelector", "SearchState", "SolveReport", "select_branch_clause",
    "solve_dc", "solve_min_dc",
    "DecodeResult", "approximation_ratio", "decode_fast", "decode_slow",
    "RngStream", "derive_seed", "splitmix64",
]

__version__ = "0.1.0"
