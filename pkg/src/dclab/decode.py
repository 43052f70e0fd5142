"""Greedy clique decoding driven by a per-vertex probability map.

Two decoders trade quality for cost: the fast one makes a single greedy pass
over all vertices in descending probability, the slow one restarts that
growth from every vertex as a seed and keeps the best clique found.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .oracle import exact_max_clique, is_clique
from .probmap import ProbMap


@dataclass(frozen=True)
class DecodeResult:
    clique: tuple[int, ...]
    ratio: float | None = None

    @property
    def size(self) -> int:
        return len(self.clique)


def _by_descending_p(pm: ProbMap, vertices) -> list[int]:
    return sorted(vertices, key=lambda v: (-pm.p[v - 1], v))


def decode_fast(g: Graph, pm: ProbMap) -> DecodeResult:
    """Single pass in descending probability, keeping vertices compatible so far."""
    if pm.n != g.n:
        raise ValueError("probability map does not match graph")
    chosen: list[int] = []
    common = g.all_bits
    for v in _by_descending_p(pm, range(1, g.n + 1)):
        if (common >> v) & 1:
            chosen.append(v)
            common &= g.adj_bits[v]
    return DecodeResult(tuple(sorted(chosen)))


def decode_slow(g: Graph, pm: ProbMap) -> DecodeResult:
    """Greedy growth restarted from every seed vertex; best clique wins.

    Seeds are tried in descending probability; growth inside a seed's running
    common neighborhood also follows descending probability.  Ties between
    seeds' results go to the larger clique, then the lexicographically
    smallest vertex set, so the outcome is deterministic.
    """
    if pm.n != g.n:
        raise ValueError("probability map does not match graph")
    best: tuple[int, ...] = ()
    for seed in _by_descending_p(pm, range(1, g.n + 1)):
        clique = [seed]
        common = g.adj_bits[seed]
        while common:
            v = _by_descending_p(pm, _bits(common))[0]
            clique.append(v)
            common &= g.adj_bits[v]
        cand = tuple(sorted(clique))
        if len(cand) > len(best) or (len(cand) == len(best) and cand < best):
            best = cand
    return DecodeResult(best)


def approximation_ratio(found, g: Graph) -> float:
    """Size of the found clique over the exact maximum clique size."""
    members = sorted(set(found))
    if not members:
        raise ValueError("empty clique has no ratio")
    if not is_clique(g, members):
        raise ValueError(f"{members} is not a clique of the graph")
    _, opt = exact_max_clique(g)
    return len(members) / opt


def _bits(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out
