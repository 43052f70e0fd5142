"""Product Bernoulli measure over vertex subsets: bounds, losses, entropy scores.

Each vertex v carries an independent Bernoulli(p_v); a random subset S contains
v with probability p_v.  This module evaluates, in closed form:

  - the log lower bounds for "S is a clique" (over non-edges) and "S dominates"
    (over closed neighborhoods), which correlation inequalities justify;
  - the loss functions built from those bounds (max-clique, dominating-clique,
    minimum dominating-clique with either the plain expected size or the
    permutation-event expectation);
  - joint-entropy branch scores in a fast and an accurate variant, plus the
    softmax re-weighting applied to active variables during search.

Conventions: 0*log(0) := 0 everywhere; a log of a zero bound factor is clamped
to a large negative floor instead of -inf so losses stay finite.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence

from .graph import Graph
from .probmap import ProbMap

#: Substitute for ln(0) in bound terms; keeps losses finite and order-preserving.
LOG_FLOOR = -1e9


class LogBounds(NamedTuple):
    """Log-domain lower bounds for the clique and domination events.

    clique_log: sum over non-adjacent pairs {i,j} of ln(1 - p_i*p_j).
    dominate_log: sum over vertices i of ln(1 - prod_{j in N[i]} (1 - p_j)).
    Both are <= 0; clique_log is 0 on complete graphs.
    """

    clique_log: float
    dominate_log: float


class EntropyScore(NamedTuple):
    value: float
    mode: str


def _check_match(g: Graph, pm: ProbMap) -> None:
    if pm.n != g.n:
        raise ValueError(f"probability map has {pm.n} entries, graph has {g.n} vertices")


def _clamped_log(x: float, floor: float) -> float:
    return math.log(x) if x > 0.0 else floor


def _xlog2x(x: float) -> float:
    return x * math.log2(x) if x > 0.0 else 0.0


def subset_probability(pm: ProbMap, s) -> float:
    """P(S): product of p_v over members and (1 - p_v) over non-members."""
    members = set(s)
    prob = 1.0
    for v in range(1, pm.n + 1):
        pv = pm.p[v - 1]
        prob *= pv if v in members else 1.0 - pv
    return prob


def bernoulli_entropy(p: float) -> float:
    """H(p) in bits, with the 0*log0 := 0 convention."""
    return -_xlog2x(p) - _xlog2x(1.0 - p)


def clique_dominate_log_bounds(g: Graph, pm: ProbMap, floor: float = LOG_FLOOR) -> LogBounds:
    _check_match(g, pm)
    p = pm.p
    clique_log = 0.0
    for i in range(1, g.n + 1):
        bits = g.adj_bits[i]
        for j in range(i + 1, g.n + 1):
            if not (bits >> j) & 1:
                clique_log += _clamped_log(1.0 - p[i - 1] * p[j - 1], floor)
    dominate_log = 0.0
    for i in range(1, g.n + 1):
        miss = 1.0 - p[i - 1]
        for j in g.adj[i]:
            miss *= 1.0 - p[j - 1]
        dominate_log += _clamped_log(1.0 - miss, floor)
    return LogBounds(clique_log, dominate_log)


def loss_max_clique(g: Graph, pm: ProbMap) -> float:
    """-ln(expected subset size) minus the clique log bound."""
    _check_match(g, pm)
    expected = sum(pm.p)
    if expected <= 0.0:
        raise ValueError("expected subset size is zero; loss undefined for an all-zero map")
    return -math.log(expected) - clique_dominate_log_bounds(g, pm).clique_log


def loss_dc(g: Graph, pm: ProbMap) -> float:
    """Negated sum of the domination and clique log bounds."""
    bounds = clique_dominate_log_bounds(g, pm)
    return -(bounds.dominate_log + bounds.clique_log)


def loss_min_dc(g: Graph, pm: ProbMap, order: Sequence[int] | None = None) -> float:
    """Dominating-clique loss plus ln of the expected solution size.

    With ``order=None`` the expectation is the plain sum of probabilities;
    otherwise ``order`` is a vertex permutation and the expectation is taken
    over the permutation event (see :func:`permutation_event_expectation`).
    """
    _check_match(g, pm)
    if order is None:
        expected = sum(pm.p)
    else:
        expected = permutation_event_expectation(g, pm, order)
    if expected <= 0.0:
        raise ValueError(f"non-positive expected size {expected}; log undefined")
    return loss_dc(g, pm) + math.log(expected)


def permutation_event_expectation(g: Graph, pm: ProbMap, order: Sequence[int]) -> float:
    """Expected |S| restricted to the event generated by a vertex permutation.

    The event collects, for each position i, the subsets that contain order[i],
    avoid all earlier vertices, and contain no vertex non-adjacent to order[i].
    The closed form sums, per position, the probability of that slice times its
    conditional expected size (1 plus the probability mass of the still-free
    neighbors).
    """
    _check_match(g, pm)
    seq = list(order)
    if sorted(seq) != list(range(1, g.n + 1)):
        raise ValueError("order must be a permutation of 1..n")
    p = pm.p
    earlier: set[int] = set()
    prefix = 1.0
    total = 0.0
    for i, v in enumerate(seq):
        later_nonadj = 1.0
        bits = g.adj_bits[v]
        for k in seq[i + 1:]:
            if not (bits >> k) & 1:
                later_nonadj *= 1.0 - p[k - 1]
        free_mass = sum(p[r - 1] for r in g.adj[v] if r not in earlier)
        total += p[v - 1] * prefix * later_nonadj * (1.0 + free_mass)
        prefix *= 1.0 - p[v - 1]
        earlier.add(v)
    return total


def joint_entropy_fast(ps: Sequence[float]) -> EntropyScore:
    """Independent-sum entropy with an all-zeros correction term.

    Sum of the per-variable entropies minus q*log2(q) where q is the probability
    that every variable is 0.  Always >= the plain sum, and 0 for an empty list.
    """
    total = 0.0
    q = 1.0
    for p in ps:
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"probability out of range: {p}")
        total += bernoulli_entropy(p)
        q *= 1.0 - p
    return EntropyScore(total - _xlog2x(q), "fast")


def joint_entropy_accurate(g: Graph, pm: ProbMap, variables: Sequence[int]) -> EntropyScore:
    """Order-conditioned joint entropy of the listed variables.

    Walks the variables in the given order; position i contributes
    p * (-log2(p) + sum of H over the still-unfixed neighbors of variables[i]),
    where p is the probability that variables[i] is the first one set among the
    listed variables and none of its later non-neighbors in the list is set.
    """
    _check_match(g, pm)
    vs = list(variables)
    if len(set(vs)) != len(vs) or any(not 1 <= v <= g.n for v in vs):
        raise ValueError("variables must be distinct vertices of the graph")
    return EntropyScore(_accurate_entropy(g.adj_bits, pm.p, vs), "accurate")


def _accurate_entropy(adj_bits, p_by_index, variables,
                      h_cache=None, hsum_cache=None) -> float:
    """Shared core for the accurate score; p_by_index is 0-based per vertex.

    The caches memoize per-vertex entropies and per-vertex neighbor-entropy
    sums; they are only valid for one fixed probability vector, so callers
    scoring many variable lists under the same vector (the solver, once per
    node) pass the same dicts, and everyone else passes nothing.
    """
    m = len(variables)
    if m == 0:
        return 0.0
    if h_cache is None:
        h_cache = {}
    if hsum_cache is None:
        hsum_cache = {}

    def h_of(r: int) -> float:
        h = h_cache.get(r)
        if h is None:
            h = bernoulli_entropy(p_by_index[r - 1])
            h_cache[r] = h
        return h

    one_minus = [1.0 - p_by_index[v - 1] for v in variables]
    suffix = [1.0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix[i] = suffix[i + 1] * one_minus[i]

    later_bits = 0
    for v in variables:
        later_bits |= 1 << v
    total = 0.0
    prefix = 1.0
    earlier_bits = 0
    for i, v in enumerate(variables):
        later_bits &= ~(1 << v)
        nbrs = adj_bits[v]
        # Product over later listed non-neighbors of (1 - p): divide the full
        # suffix product by the later-neighbor factors (all nonzero), falling
        # back to the direct product when a neighbor factor is exactly 0.
        adj_later = nbrs & later_bits
        div = 1.0
        while adj_later:
            low = adj_later & -adj_later
            div *= 1.0 - p_by_index[low.bit_length() - 2]
            adj_later ^= low
        if div > 0.0:
            later_nonadj = suffix[i + 1] / div
        else:
            later_nonadj = 1.0
            rest = later_bits & ~nbrs
            while rest:
                low = rest & -rest
                later_nonadj *= 1.0 - p_by_index[low.bit_length() - 2]
                rest ^= low
        prob = p_by_index[v - 1] * prefix * later_nonadj
        if prob > 1.0:  # guard against rounding from the division path
            prob = 1.0
        if prob > 0.0:
            hs = hsum_cache.get(v)
            if hs is None:
                hs = 0.0
                rest = nbrs
                while rest:
                    low = rest & -rest
                    hs += h_of(low.bit_length() - 1)
                    rest ^= low
                hsum_cache[v] = hs
            corr = 0.0
            rest = nbrs & earlier_bits
            while rest:
                low = rest & -rest
                corr += h_of(low.bit_length() - 1)
                rest ^= low
            total += prob * (-math.log2(prob) + hs - corr)
        prefix *= one_minus[i]
        earlier_bits |= 1 << v
    return total


def softmax_reweigh(values: Sequence[float], temperature: float = 1.0) -> list[float]:
    """Softmax weights of the inputs; shift-invariant and summing to 1."""
    if len(values) == 0:
        raise ValueError("softmax of an empty list")
    if temperature <= 0.0:
        raise ValueError(f"temperature must be positive, got {temperature}")
    top = max(values)
    exps = [math.exp((v - top) / temperature) for v in values]
    norm = sum(exps)
    return [e / norm for e in exps]
